#include "supermod/cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "supermod/linalg.hpp"
#include "supermod/standardize.hpp"

namespace supermod {

IndependencyModel::IndependencyModel(VariableSet vars)
    : vars_(std::move(vars)), independent_(triplet_count(vars_.size()), false) {}

IndependencyModel::IndependencyModel(VariableSet vars, std::vector<bool> independent)
    : vars_(std::move(vars)), independent_(std::move(independent)) {
  if (independent_.size() != triplet_count(vars_.size())) {
    throw std::invalid_argument("independency model: wrong number of triplet flags");
  }
}

IndependencyModel IndependencyModel::full(VariableSet vars) {
  const std::size_t count = triplet_count(vars.size());
  return IndependencyModel(std::move(vars), std::vector<bool>(count, true));
}

std::size_t IndependencyModel::size() const {
  return static_cast<std::size_t>(std::count(independent_.begin(), independent_.end(), true));
}

std::vector<ElementaryTriplet> IndependencyModel::independencies() const {
  std::vector<ElementaryTriplet> out;
  const int n = vars_.size();
  for (std::size_t i = 0; i < independent_.size(); ++i) {
    if (independent_[i]) out.push_back(triplet_at(n, i));
  }
  return out;
}

bool IndependencyModel::includes(const IndependencyModel& other) const {
  if (!(vars_ == other.vars_)) throw std::domain_error("independency models over different variables");
  for (std::size_t i = 0; i < independent_.size(); ++i) {
    if (other.independent_[i] && !independent_[i]) return false;
  }
  return true;
}

ScalarTable scalar_table(const SetFunction& m) {
  ScalarTable table{m.vars(), {}};
  const auto ts = triplets(m.n());
  table.entries.reserve(ts.size());
  for (const auto& t : ts) table.entries.push_back(triplet_product(m, t));
  return table;
}

IndependencyModel independency_model(const SetFunction& m) {
  const auto table = scalar_table(m);
  std::vector<bool> zero(table.entries.size());
  for (std::size_t i = 0; i < zero.size(); ++i) zero[i] = table.entries[i].is_zero();
  return IndependencyModel(m.vars(), std::move(zero));
}

std::string format_triplet(const VariableSet& vars, const ElementaryTriplet& t) {
  return vars.label(t.a) + " ⫫ " + vars.label(t.b) + " | " + vars.key(t.c);
}

bool quantitatively_equivalent(const SetFunction& m1, const SetFunction& m2) {
  require_same_vars(m1, m2, "quantitatively_equivalent");
  return is_modular(m1 - m2);
}

bool qualitatively_equivalent(const SetFunction& m1, const SetFunction& m2) {
  require_same_vars(m1, m2, "qualitatively_equivalent");
  if (!is_supermodular(m1) || !is_supermodular(m2)) {
    throw std::domain_error("qualitatively_equivalent: inputs must be supermodular");
  }
  return independency_model(m1) == independency_model(m2);
}

std::size_t imset_rank(const VariableSet& vars, const std::vector<ElementaryTriplet>& ts) {
  const std::size_t width = vars.power_size();
  linalg::IntMatrix rows;
  rows.reserve(ts.size());
  for (const auto& t : ts) {
    std::vector<mpz_class> row(width);
    const SubsetMask ac = t.c.with(t.a);
    const SubsetMask bc = t.c.with(t.b);
    row[t.c.bits] += 1;
    row[(ac | bc).bits] += 1;
    row[ac.bits] -= 1;
    row[bc.bits] -= 1;
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows));
}

namespace {

FaceDescriptor face_from_model(const IndependencyModel& model) {
  FaceDescriptor face;
  face.tight = model.independencies();
  face.rank = imset_rank(model.vars(), face.tight);
  face.dimension = model.vars().power_size() - face.rank;
  return face;
}

}  // namespace

FaceDescriptor face_of(const SetFunction& m) {
  if (!is_supermodular(m)) throw std::domain_error("face_of: input is not supermodular");
  return face_from_model(independency_model(m));
}

ExtremalityReport is_extreme(const SetFunction& m) {
  ExtremalityReport report;
  const auto table = scalar_table(m);
  report.supermodular =
      std::all_of(table.entries.begin(), table.entries.end(), [](const Rational& x) { return x.sign() >= 0; });
  report.modular =
      std::all_of(table.entries.begin(), table.entries.end(), [](const Rational& x) { return x.is_zero(); });
  report.face = face_from_model(independency_model(m));
  report.extreme = report.supermodular && !report.modular &&
                   report.face.dimension == static_cast<std::size_t>(m.n()) + 2;
  return report;
}

SetFunction integral_representative(const SetFunction& m) {
  if (!is_supermodular(m)) throw std::domain_error("integral_representative: input is not supermodular");
  const SetFunction r = standardize(m, StandardizationKind::Lower);
  const auto ints = linalg::primitive_integer(r.values());
  std::vector<Rational> values;
  values.reserve(ints.size());
  for (const auto& x : ints) values.emplace_back(x);
  return SetFunction(m.vars(), std::move(values));
}

}  // namespace supermod
