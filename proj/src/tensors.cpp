#include "entailkit/tensors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace entailkit {

namespace {

void check_dims(std::size_t a, std::size_t b) {
  if (a != b) throw DimMismatchError(a, b);
}

double dot(const DistVector& a, const DistVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DistVector hadamard(const DistVector& a, const DistVector& b) {
  check_dims(a.size(), b.size());
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return DistVector(std::move(out));
}

DistVector maybe_augment(DistVector composite, const FactoredVerbTensor& t) {
  if (!t.verb_vector) return composite;
  return augment_with_verb_vector(composite, *t.verb_vector);
}

}  // namespace

FactoredVerbTensor build_verb(const VerbArgumentTable& table, const std::string& verb,
                              const VectorSpace& space, bool augment) {
  auto it = table.occurrences.find(verb);
  if (it == table.occurrences.end()) throw UnknownVerbError(verb);
  FactoredVerbTensor t;
  t.verb = verb;
  for (const auto& occ : it->second) {
    FactoredVerbTensor::Occurrence resolved;
    if (occ.subject) {
      if (const DistVector* v = space.find(*occ.subject)) resolved.sbj = *v;
    }
    if (occ.object) {
      if (const DistVector* v = space.find(*occ.object)) resolved.obj = *v;
    }
    if (resolved.sbj || resolved.obj) t.occurrences.push_back(std::move(resolved));
  }
  if (t.occurrences.empty()) throw EmptyArgumentsError(verb);
  if (augment) {
    const DistVector* vv = space.find(verb);
    if (!vv) throw UnknownVerbError(verb);
    t.verb_vector = *vv;
  }
  return t;
}

DistVector augment_with_verb_vector(const DistVector& composite, const DistVector& verb_vector) {
  return hadamard(composite, verb_vector);
}

DistVector compose_relational_sv(const FactoredVerbTensor& t, const DistVector& s) {
  bool any = false;
  std::vector<double> sum(s.size(), 0.0);
  for (const auto& occ : t.occurrences) {
    if (!occ.sbj) continue;
    check_dims(occ.sbj->size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) sum[i] += (*occ.sbj)[i];
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(hadamard(DistVector(std::move(sum)), s), t);
}

DistVector compose_relational_vo(const FactoredVerbTensor& t, const DistVector& o) {
  std::vector<double> sum(o.size(), 0.0);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.obj) continue;
    check_dims(occ.obj->size(), o.size());
    for (std::size_t i = 0; i < o.size(); ++i) sum[i] += (*occ.obj)[i];
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(hadamard(DistVector(std::move(sum)), o), t);
}

SentenceMatrix compose_relational_svo(const FactoredVerbTensor& t, const DistVector& s,
                                      const DistVector& o) {
  check_dims(s.size(), o.size());
  const std::size_t d = s.size();
  SentenceMatrix verb_matrix = SentenceMatrix::zeros(d);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.sbj || !occ.obj) continue;
    check_dims(occ.sbj->size(), d);
    check_dims(occ.obj->size(), d);
    for (std::size_t i = 0; i < d; ++i) {
      double si = (*occ.sbj)[i];
      if (si == 0.0) continue;
      for (std::size_t j = 0; j < d; ++j) verb_matrix.at(i, j) += si * (*occ.obj)[j];
    }
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  SentenceMatrix out = SentenceMatrix::zeros(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.at(i, j) = verb_matrix.at(i, j) * s[i] * o[j];
    }
  }
  if (t.verb_vector) {
    // Per-axis scaling by sqrt(v_i * v_j): flattened support becomes the
    // intersection with F(v) x F(v).
    const DistVector& v = *t.verb_vector;
    check_dims(v.size(), d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        out.at(i, j) *= std::sqrt(v[i] * v[j]);
      }
    }
  }
  return out;
}

DistVector compose_copy_subject(const FactoredVerbTensor& t, const DistVector& s,
                                const DistVector& o) {
  std::vector<double> sum(s.size(), 0.0);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.sbj || !occ.obj) continue;
    check_dims(occ.sbj->size(), s.size());
    check_dims(occ.obj->size(), o.size());
    double w = dot(*occ.obj, o);
    for (std::size_t i = 0; i < s.size(); ++i) sum[i] += w * (*occ.sbj)[i];
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(hadamard(DistVector(std::move(sum)), s), t);
}

DistVector compose_copy_object(const FactoredVerbTensor& t, const DistVector& s,
                               const DistVector& o) {
  std::vector<double> sum(o.size(), 0.0);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.sbj || !occ.obj) continue;
    check_dims(occ.sbj->size(), s.size());
    check_dims(occ.obj->size(), o.size());
    double w = dot(*occ.sbj, s);
    for (std::size_t i = 0; i < o.size(); ++i) sum[i] += w * (*occ.obj)[i];
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(hadamard(DistVector(std::move(sum)), o), t);
}

DistVector compose_frobenius_additive(const FactoredVerbTensor& t, const DistVector& s,
                                      const DistVector& o) {
  // Combine the un-augmented copy models, then apply the verb vector once.
  FactoredVerbTensor plain = t;
  plain.verb_vector.reset();
  DistVector cs = compose_copy_subject(plain, s, o);
  DistVector co = compose_copy_object(plain, s, o);
  std::vector<double> out(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) out[i] = cs[i] + co[i];
  return maybe_augment(DistVector(std::move(out)), t);
}

DistVector compose_frobenius_multiplicative(const FactoredVerbTensor& t, const DistVector& s,
                                            const DistVector& o) {
  FactoredVerbTensor plain = t;
  plain.verb_vector.reset();
  DistVector cs = compose_copy_subject(plain, s, o);
  DistVector co = compose_copy_object(plain, s, o);
  return maybe_augment(hadamard(cs, co), t);
}

DistVector compose_projective_sv(const FactoredVerbTensor& t, const DistVector& s) {
  std::vector<double> sum(s.size(), 0.0);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.sbj) continue;
    DistVector n = l2_normalize(*occ.sbj);
    check_dims(n.size(), s.size());
    double w = dot(n, s);
    for (std::size_t i = 0; i < s.size(); ++i) sum[i] += w * n[i];
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(DistVector(std::move(sum)), t);
}

DistVector compose_projective_vo(const FactoredVerbTensor& t, const DistVector& o) {
  std::vector<double> sum(o.size(), 0.0);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.obj) continue;
    DistVector n = l2_normalize(*occ.obj);
    check_dims(n.size(), o.size());
    double w = dot(n, o);
    for (std::size_t i = 0; i < o.size(); ++i) sum[i] += w * n[i];
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(DistVector(std::move(sum)), t);
}

DistVector compose_projective_svo(const FactoredVerbTensor& t, const DistVector& s,
                                  const DistVector& o) {
  check_dims(s.size(), o.size());
  std::vector<double> sum(s.size(), 0.0);
  bool any = false;
  for (const auto& occ : t.occurrences) {
    if (!occ.sbj || !occ.obj) continue;
    DistVector ns = l2_normalize(*occ.sbj);
    DistVector no = l2_normalize(*occ.obj);
    check_dims(ns.size(), s.size());
    double w = dot(s, ns) * dot(no, o);
    for (std::size_t i = 0; i < s.size(); ++i) sum[i] += w * (ns[i] + no[i]) / 2.0;
    any = true;
  }
  if (!any) throw EmptyArgumentsError(t.verb);
  return maybe_augment(DistVector(std::move(sum)), t);
}

LeastSquaresVerbMatrix train_least_squares(const std::vector<DistVector>& X,
                                           const std::vector<DistVector>& Y, double ridge,
                                           const std::string& verb,
                                           LeastSquaresVerbMatrix::Slot slot) {
  if (X.empty() || X.size() != Y.size()) {
    throw ShapeError("X and Y must have the same non-zero row count");
  }
  const std::size_t n = X.size();
  const std::size_t d = X[0].size();
  for (const auto& row : X) check_dims(row.size(), d);
  for (const auto& row : Y) check_dims(row.size(), d);

  Eigen::MatrixXd Xm(n, d), Ym(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Xm(r, c) = X[r][c];
      Ym(r, c) = Y[r][c];
    }
  }
  Eigen::MatrixXd gram = Xm.transpose() * Xm;
  gram.diagonal().array() += ridge;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (ridge == 0.0 && !lu.isInvertible()) throw SingularSystemError();
  Eigen::MatrixXd Wt = lu.solve(Xm.transpose() * Ym);  // d x d; column i = w_i

  LeastSquaresVerbMatrix m;
  m.verb = verb;
  m.slot = slot;
  m.dims = d;
  m.rows.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m.rows[i * d + j] = Wt(j, i);
  }
  return m;
}

DistVector compose_least_squares(const LeastSquaresVerbMatrix& m, const DistVector& arg) {
  if (arg.size() != m.dims) throw ShapeError("argument dimensionality does not match the matrix");
  std::vector<double> out(m.dims, 0.0);
  for (std::size_t i = 0; i < m.dims; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.dims; ++j) s += m.at(i, j) * arg[j];
    out[i] = std::max(0.0, s);
  }
  return DistVector(std::move(out));
}

}  // namespace entailkit
