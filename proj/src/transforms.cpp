#include "supermod/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "supermod/kernels/bits.hpp"
#include "supermod/standardize.hpp"

namespace supermod {

// ---- Permutation / Coarsening ------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::domain_error("permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_labels(const VariableSet& vars,
                                     const std::map<std::string, std::string>& mapping) {
  std::vector<int> image(static_cast<std::size_t>(vars.size()));
  std::iota(image.begin(), image.end(), 0);
  for (const auto& [from, to] : mapping) {
    image[static_cast<std::size_t>(vars.index_of(from))] = vars.index_of(to);
  }
  return Permutation(std::move(image));
}

SubsetMask Permutation::apply(SubsetMask s) const {
  SubsetMask out;
  for (int i = 0; i < size(); ++i) {
    if (s.contains(i)) out = out.with(image_[static_cast<std::size_t>(i)]);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Coarsening::Coarsening(VariableSet source, VariableSet target, std::vector<int> sigma)
    : source_(std::move(source)), target_(std::move(target)), sigma_(std::move(sigma)) {
  if (sigma_.size() != static_cast<std::size_t>(source_.size())) {
    throw std::domain_error("coarsening: sigma must map every source variable");
  }
  std::vector<bool> hit(static_cast<std::size_t>(target_.size()), false);
  for (int v : sigma_) {
    if (v < 0 || v >= target_.size()) throw std::domain_error("coarsening: target index out of range");
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw std::domain_error("coarsening: sigma is not onto the target variables");
  }
}

Coarsening Coarsening::from_labels(const VariableSet& source,
                                   const std::map<std::string, std::string>& mapping) {
  std::set<std::string> images;
  for (const auto& label : source.labels()) {
    auto it = mapping.find(label);
    if (it == mapping.end()) throw std::domain_error("coarsening: source label '" + label + "' unmapped");
    images.insert(it->second);
  }
  for (const auto& [from, to] : mapping) (void)source.index_of(from);
  VariableSet target(std::vector<std::string>(images.begin(), images.end()));
  std::vector<int> sigma;
  for (const auto& label : source.labels()) sigma.push_back(target.index_of(mapping.at(label)));
  return Coarsening(source, target, std::move(sigma));
}

SubsetMask Coarsening::preimage(SubsetMask t) const {
  SubsetMask out;
  for (int i = 0; i < source_.size(); ++i) {
    if (t.contains(sigma_[static_cast<std::size_t>(i)])) out = out.with(i);
  }
  return out;
}

// ---- Outer composers -----------------------------------------------------------

OuterComposer OuterComposer::product() {
  return {"product", [](const Rational& x, const Rational& y) { return x * y; }};
}

OuterComposer OuterComposer::power(int k) {
  if (k < 1) throw std::invalid_argument("power composer needs exponent >= 1");
  return {"power:" + std::to_string(k), [k](const Rational& x, const Rational&) {
            Rational out(1);
            for (int i = 0; i < k; ++i) out *= x;
            return out;
          }};
}

OuterComposer OuterComposer::first() {
  return {"first", [](const Rational& x, const Rational&) { return x; }};
}

OuterComposer OuterComposer::parse(const std::string& id) {
  if (id == "product") return product();
  if (id == "first") return first();
  if (id == "square") return power(2);
  if (id.rfind("power:", 0) == 0) {
    std::size_t used = 0;
    const int k = std::stoi(id.substr(6), &used);
    if (used != id.size() - 6) throw std::invalid_argument("bad composer '" + id + "'");
    return power(k);
  }
  throw std::invalid_argument("unknown composer '" + id + "'");
}

// ---- Self-transformations -------------------------------------------------------

SetFunction permute(const SetFunction& m, const Permutation& pi) {
  if (pi.size() != m.n()) throw std::domain_error("permute: permutation size mismatch");
  SetFunction out(m.vars());
  for (std::uint32_t s = 0; s < m.size(); ++s) out[SubsetMask(s)] = m[pi.apply(SubsetMask(s))];
  return out;
}

SetFunction reflect(const SetFunction& m) {
  SetFunction out(m.vars());
  const std::uint32_t top = m.vars().full().bits;
  for (std::uint32_t s = 0; s < m.size(); ++s) out[SubsetMask(s)] = m[SubsetMask(top & ~s)];
  return out;
}

SetFunction monotonize_max_sub(const SetFunction& m) {
  SetFunction out = m;
  // Increasing mask order visits every S∖i before S.
  for (std::uint32_t s = 0; s < m.size(); ++s) {
    for (int i = 0; i < m.n(); ++i) {
      if (((s >> i) & 1u) == 0) continue;
      const Rational& below = out[SubsetMask(s & ~(1u << i))];
      if (below > out[SubsetMask(s)]) out[SubsetMask(s)] = below;
    }
  }
  return out;
}

SetFunction monotonize_max_sup(const SetFunction& m) {
  SetFunction out = m;
  for (std::uint32_t s = static_cast<std::uint32_t>(m.size()); s-- > 0;) {
    for (int i = 0; i < m.n(); ++i) {
      if ((s >> i) & 1u) continue;
      const Rational& above = out[SubsetMask(s | (1u << i))];
      if (above > out[SubsetMask(s)]) out[SubsetMask(s)] = above;
    }
  }
  return out;
}

namespace {

bool in_lower_cone(const SetFunction& m) {
  return is_standardized(m, StandardizationKind::Lower) && is_supermodular(m);
}

bool in_upper_cone(const SetFunction& m) {
  return is_standardized(m, StandardizationKind::Upper) && is_supermodular(m);
}

// Checks monotone convex sections and condition (4) of g on grid X × Y.
// Consecutive grid points suffice: the conditions telescope.
std::vector<std::string> check_composer(const OuterComposer& g, const std::vector<Rational>& xs,
                                        const std::vector<Rational>& ys) {
  std::vector<std::string> out;
  const auto at = [&](std::size_t i, std::size_t j) { return g.g(xs[i], ys[j]); };
  const auto where = [](const Rational& x, const Rational& y) {
    return "(" + x.to_string() + "," + y.to_string() + ")";
  };
  for (std::size_t j = 0; j < ys.size(); ++j) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (at(i + 1, j) < at(i, j)) out.push_back("x-section decreasing at " + where(xs[i], ys[j]));
      if (i + 2 < xs.size()) {
        const Rational s1 = (at(i + 1, j) - at(i, j)) / (xs[i + 1] - xs[i]);
        const Rational s2 = (at(i + 2, j) - at(i + 1, j)) / (xs[i + 2] - xs[i + 1]);
        if (s2 < s1) out.push_back("x-section not convex at " + where(xs[i + 1], ys[j]));
      }
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      if (at(i, j + 1) < at(i, j)) out.push_back("y-section decreasing at " + where(xs[i], ys[j]));
      if (j + 2 < ys.size()) {
        const Rational s1 = (at(i, j + 1) - at(i, j)) / (ys[j + 1] - ys[j]);
        const Rational s2 = (at(i, j + 2) - at(i, j + 1)) / (ys[j + 2] - ys[j + 1]);
        if (s2 < s1) out.push_back("y-section not convex at " + where(xs[i], ys[j + 1]));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      if (at(i + 1, j) + at(i, j + 1) > at(i + 1, j + 1) + at(i, j)) {
        out.push_back("condition (4) fails at " + where(xs[i], ys[j]));
      }
    }
  }
  return out;
}

std::vector<Rational> sorted_distinct(const std::vector<Rational>& v) {
  std::vector<Rational> out = v;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

OuterComposition outer_compose(const SetFunction& m, const SetFunction& r, const OuterComposer& g) {
  require_same_vars(m, r, "outer_compose");
  if (!in_lower_cone(m) || !in_lower_cone(r)) {
    throw std::domain_error("outer_compose: inputs must be ℓ-standardized supermodular");
  }
  OuterComposition result{SetFunction(m.vars()), {}};
  for (std::uint32_t s = 0; s < m.size(); ++s) {
    result.value[SubsetMask(s)] = g.g(m[SubsetMask(s)], r[SubsetMask(s)]);
  }
  result.violations = check_composer(g, sorted_distinct(m.values()), sorted_distinct(r.values()));
  return result;
}

SetFunction pointwise_multiply(const SetFunction& m1, const SetFunction& m2) {
  require_same_vars(m1, m2, "pointwise_multiply");
  const bool lower = in_lower_cone(m1) && in_lower_cone(m2);
  const bool upper = in_upper_cone(m1) && in_upper_cone(m2);
  if (!lower && !upper) {
    throw std::domain_error("pointwise_multiply: inputs must both be in K_ℓ or both in K_u");
  }
  SetFunction out(m1.vars());
  for (std::uint32_t s = 0; s < m1.size(); ++s) out[SubsetMask(s)] = m1[SubsetMask(s)] * m2[SubsetMask(s)];
  return out;
}

// ---- Extensions and projections ---------------------------------------------------

SetFunction lift(const SetFunction& r, const VariableSet& target) {
  if (!r.vars().is_subset_of(target)) throw std::domain_error("lift: variables are not contained in the target");
  const std::uint32_t image = r.vars().image_in(target).bits;
  SetFunction out(target);
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    out[SubsetMask(s)] = r[SubsetMask(kernels::extract_bits(s, image))];
  }
  return out;
}

SetFunction minor(const SetFunction& m, SubsetMask deleted, SubsetMask extracted) {
  const VariableSet& vars = m.vars();
  if (!vars.valid(deleted) || !vars.valid(extracted)) throw std::domain_error("minor: mask out of range");
  if (!(deleted & extracted).empty()) throw std::domain_error("minor: deleted and extracted sets overlap");
  const SubsetMask keep = vars.full() - (deleted | extracted);
  if (keep.empty()) throw std::domain_error("minor: no variables left");
  SetFunction out(vars.subset(keep));
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    out[SubsetMask(s)] = m[SubsetMask(kernels::deposit_bits(s, keep.bits)) | extracted];
  }
  return out;
}

SetFunction deletion(const SetFunction& m, SubsetMask deleted) { return minor(m, deleted, SubsetMask{}); }

SetFunction extraction(const SetFunction& m, SubsetMask extracted) {
  return minor(m, SubsetMask{}, extracted);
}

SetFunction mean_minor(const SetFunction& m, SubsetMask keep) {
  const VariableSet& vars = m.vars();
  if (!vars.valid(keep) || keep.empty()) throw std::domain_error("mean_minor: invalid variable subset");
  const SubsetMask rest = vars.full() - keep;
  const auto rests = subsets_of(rest);
  const Rational scale(mpz_class(1), mpz_class(1) << rest.size());
  SetFunction out(vars.subset(keep));
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    const SubsetMask base(kernels::deposit_bits(s, keep.bits));
    Rational sum;
    for (SubsetMask l : rests) sum += m[base | l];
    out[SubsetMask(s)] = sum * scale;
  }
  return out;
}

SetFunction coarsen(const SetFunction& m, const Coarsening& sigma) {
  if (!(m.vars() == sigma.source())) throw std::domain_error("coarsen: source variables mismatch");
  SetFunction out(sigma.target());
  for (std::uint32_t t = 0; t < out.size(); ++t) out[SubsetMask(t)] = m[sigma.preimage(SubsetMask(t))];
  return out;
}

SetFunction contract(const SetFunction& m, SubsetMask group, const std::string& into) {
  const VariableSet& vars = m.vars();
  if (!vars.valid(group) || group.empty()) throw std::domain_error("contract: invalid group");
  std::map<std::string, std::string> mapping;
  for (int i = 0; i < vars.size(); ++i) {
    const std::string& label = vars.label(i);
    if (group.contains(i)) {
      mapping[label] = into;
    } else {
      if (label == into) throw std::domain_error("contract: label '" + into + "' already used outside the group");
      mapping[label] = label;
    }
  }
  return coarsen(m, Coarsening::from_labels(vars, mapping));
}

SetFunction max_minor(const SetFunction& m, SubsetMask keep) {
  const VariableSet& vars = m.vars();
  if (!vars.valid(keep) || keep.empty()) throw std::domain_error("max_minor: invalid variable subset");
  const auto rests = subsets_of(vars.full() - keep);
  SetFunction out(vars.subset(keep));
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    const SubsetMask base(kernels::deposit_bits(s, keep.bits));
    Rational best = m[base];
    for (SubsetMask l : rests) {
      if (m[base | l] > best) best = m[base | l];
    }
    out[SubsetMask(s)] = best;
  }
  return out;
}

SetFunction product_compose(const SetFunction& r, const SetFunction& l) {
  std::vector<std::string> labels = r.vars().labels();
  for (const auto& x : l.vars().labels()) {
    if (r.vars().find(x)) throw std::domain_error("product_compose: variable sets overlap at '" + x + "'");
    labels.push_back(x);
  }
  const auto in_upward_cone = [](const SetFunction& f) {
    return f.is_nonnegative() && f.is_nondecreasing() && is_supermodular(f);
  };
  if (!in_upward_cone(r) || !in_upward_cone(l)) {
    throw std::domain_error("product_compose: factors must be non-negative, non-decreasing, supermodular");
  }
  VariableSet vars(std::move(labels));
  const std::uint32_t rimg = r.vars().image_in(vars).bits;
  const std::uint32_t limg = l.vars().image_in(vars).bits;
  SetFunction out(vars);
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    out[SubsetMask(s)] = r[SubsetMask(kernels::extract_bits(s, rimg))] *
                         l[SubsetMask(kernels::extract_bits(s, limg))];
  }
  return out;
}

namespace {

std::uint32_t proper_image(const SetFunction& r, const VariableSet& target, const char* what) {
  if (!r.vars().is_subset_of(target) || r.n() >= target.size()) {
    throw std::domain_error(std::string(what) + ": variables must form a proper subset of the target");
  }
  return r.vars().image_in(target).bits;
}

}  // namespace

SetFunction lower_modular_extension(const SetFunction& r, const VariableSet& target) {
  const std::uint32_t image = proper_image(r, target, "lower_modular_extension");
  const std::uint32_t outside = target.full().bits & ~image;
  const SetFunction rl = standardize(r, StandardizationKind::Lower);
  SetFunction out(target);
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    const SubsetMask sm(kernels::extract_bits(s, image));
    out[SubsetMask(s)] = (s & outside) == outside ? r[sm] : r[sm] - rl[sm];
  }
  return out;
}

SetFunction upper_modular_extension(const SetFunction& r, const VariableSet& target) {
  const std::uint32_t image = proper_image(r, target, "upper_modular_extension");
  const SetFunction ru = standardize(r, StandardizationKind::Upper);
  SetFunction out(target);
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    const SubsetMask sm(kernels::extract_bits(s, image));
    out[SubsetMask(s)] = (s & ~image) == 0 ? r[sm] : r[sm] - ru[sm];
  }
  return out;
}

namespace {

enum class Replication { Lower, Upper };

struct ReplicationFrame {
  std::uint32_t z_bit;   // z inside the source variables
  std::uint32_t l_src;   // L inside the source variables
  std::uint32_t l_tgt;   // L inside the target variables
  std::uint32_t fresh;   // N∖L inside the target variables
};

ReplicationFrame replication_frame(const SetFunction& r, const std::string& z, const VariableSet& target) {
  const VariableSet& src = r.vars();
  const auto zi = src.find(z);
  if (!zi) throw std::domain_error("replication: '" + z + "' is not a variable of the source");
  if (src.size() < 2) throw std::domain_error("replication: source needs a variable besides z");
  ReplicationFrame f{};
  f.z_bit = 1u << *zi;
  f.l_src = src.full().bits & ~f.z_bit;
  const VariableSet lvars = src.subset(SubsetMask(f.l_src));
  if (!lvars.is_subset_of(target)) throw std::domain_error("replication: L is not contained in the target");
  f.l_tgt = lvars.image_in(target).bits;
  f.fresh = target.full().bits & ~f.l_tgt;
  if (__builtin_popcount(f.fresh) < 2) {
    throw std::domain_error("replication: target must add at least two replica variables to L");
  }
  return f;
}

// Direct formula for any |N∖L| >= 2.
SetFunction replicate_direct(const SetFunction& r, const std::string& z, const VariableSet& target,
                             Replication kind) {
  const ReplicationFrame f = replication_frame(r, z, target);
  SetFunction out(target);
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    const std::uint32_t sl = kernels::deposit_bits(kernels::extract_bits(s, f.l_tgt), f.l_src);
    const bool upper_block = kind == Replication::Lower ? (s & f.fresh) == f.fresh : (s & f.fresh) != 0;
    out[SubsetMask(s)] = upper_block ? r[SubsetMask(sl | f.z_bit)] : r[SubsetMask(sl)];
  }
  return out;
}

// Larger replica sets are realized by repeating the two-replica step over the
// sorted fresh labels f1 < f2 < ...: the k-th step replicates f_k into {f_k, f_{k+1}}.
SetFunction replicate(const SetFunction& r, const std::string& z, const VariableSet& target, Replication kind) {
  const ReplicationFrame f = replication_frame(r, z, target);
  const std::vector<std::string> fresh = target.labels_of(SubsetMask(f.fresh));
  std::vector<std::string> labels = target.labels_of(SubsetMask(f.l_tgt));
  labels.push_back(fresh[0]);
  labels.push_back(fresh[1]);
  SetFunction current = replicate_direct(r, z, VariableSet(labels), kind);
  for (std::size_t k = 1; k + 1 < fresh.size(); ++k) {
    labels.push_back(fresh[k + 1]);
    current = replicate_direct(current, fresh[k], VariableSet(labels), kind);
  }
  return current;
}

}  // namespace

SetFunction lower_replication(const SetFunction& r, const std::string& z, const VariableSet& target) {
  return replicate(r, z, target, Replication::Lower);
}

SetFunction upper_replication(const SetFunction& r, const std::string& z, const VariableSet& target) {
  return replicate(r, z, target, Replication::Upper);
}

SetFunction relabel(const SetFunction& m, const std::map<std::string, std::string>& mapping) {
  std::map<std::string, std::string> full;
  for (const auto& label : m.vars().labels()) {
    auto it = mapping.find(label);
    full[label] = it == mapping.end() ? label : it->second;
  }
  for (const auto& [from, to] : mapping) (void)m.vars().index_of(from);
  std::set<std::string> images;
  for (const auto& [from, to] : full) images.insert(to);
  if (images.size() != full.size()) throw std::domain_error("relabel: mapping is not injective");
  return coarsen(m, Coarsening::from_labels(m.vars(), full));
}

}  // namespace supermod
