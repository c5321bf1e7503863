#include "supermod/model_prediction.hpp"

#include <stdexcept>

#include "supermod/kernels/bits.hpp"
#include "supermod/standardize.hpp"

namespace supermod {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Answers independence queries against the base function's model.
class BaseModel {
 public:
  explicit BaseModel(const SetFunction& m) : m_(m), model_(independency_model(m)) {}

  [[nodiscard]] const SetFunction& function() const { return m_; }

  [[nodiscard]] bool elementary(int a, int b, SubsetMask c) const {
    return model_.contains(make_triplet(m_.n(), a, b, c));
  }

  // <m, u_<A,B|C>> = 0 for supermodular m iff every elementary <a,b|D> with
  // a∈A, b∈B, C ⊆ D ⊆ ABC∖{a,b} is an independence. Empty A or B is trivial.
  [[nodiscard]] bool semi_elementary(SubsetMask a, SubsetMask b, SubsetMask c) const {
    const SubsetMask all = a | b | c;
    for (int i = 0; i < m_.n(); ++i) {
      if (!a.contains(i)) continue;
      for (int j = 0; j < m_.n(); ++j) {
        if (!b.contains(j)) continue;
        const SubsetMask free = all - c - singleton(i) - singleton(j);
        for (SubsetMask extra : subsets_of(free)) {
          if (!elementary(i, j, c | extra)) return false;
        }
      }
    }
    return true;
  }

 private:
  const SetFunction& m_;
  IndependencyModel model_;
};

// Re-encodes a target mask restricted to `image` as a mask over the source variables.
SubsetMask to_source(SubsetMask s, std::uint32_t image) {
  return SubsetMask(kernels::extract_bits(s.bits & image, image));
}

template <class Pred>
IndependencyModel build(const VariableSet& target, Pred independent) {
  IndependencyModel out(target);
  for (const auto& t : triplets(target.size())) {
    if (independent(t)) out.insert(t);
  }
  return out;
}

std::uint32_t single_new_variable(const SetFunction& r, const VariableSet& target, int& x) {
  if (!r.vars().is_subset_of(target) || target.size() != r.n() + 1) {
    throw std::domain_error("predict_model: modular extension formula needs exactly one new variable");
  }
  const std::uint32_t image = r.vars().image_in(target).bits;
  x = __builtin_ctz(target.full().bits & ~image);
  return image;
}

struct ReplicaFrame {
  std::uint32_t z_src;
  std::uint32_t l_src;
  std::uint32_t l_tgt;
  std::uint32_t fresh;
};

ReplicaFrame replica_frame(const SetFunction& r, const std::string& z, const VariableSet& target) {
  const int zi = r.vars().index_of(z);
  ReplicaFrame f{};
  f.z_src = 1u << zi;
  f.l_src = r.vars().full().bits & ~f.z_src;
  const VariableSet lvars = r.vars().subset(SubsetMask(f.l_src));
  if (!lvars.is_subset_of(target)) throw std::domain_error("predict_model: L is not contained in the target");
  f.l_tgt = lvars.image_in(target).bits;
  f.fresh = target.full().bits & ~f.l_tgt;
  if (__builtin_popcount(f.fresh) != 2) {
    throw std::domain_error("predict_model: replication formula needs exactly two replicas");
  }
  return f;
}

}  // namespace

std::string transform_name(const TransformSpec& spec) {
  return std::visit(overloaded{
                        [](const op::Permute&) { return "permute"; },
                        [](const op::Reflect&) { return "reflect"; },
                        [](const op::MaxSub&) { return "maxsub"; },
                        [](const op::MaxSup&) { return "maxsup"; },
                        [](const op::OuterCompose&) { return "compose"; },
                        [](const op::Multiply&) { return "multiply"; },
                        [](const op::Lift&) { return "lift"; },
                        [](const op::Minor&) { return "minor"; },
                        [](const op::MeanMinor&) { return "meanminor"; },
                        [](const op::Coarsen&) { return "coarsen"; },
                        [](const op::MaxMinor&) { return "maxminor"; },
                        [](const op::Product&) { return "product"; },
                        [](const op::LowerModular&) { return "lowmod"; },
                        [](const op::UpperModular&) { return "uppmod"; },
                        [](const op::LowerReplication&) { return "lowrepl"; },
                        [](const op::UpperReplication&) { return "upprepl"; },
                    },
                    spec);
}

SetFunction apply_transform(const SetFunction& m, const TransformSpec& spec) {
  return std::visit(
      overloaded{
          [&](const op::Permute& p) { return permute(m, p.pi); },
          [&](const op::Reflect&) { return reflect(m); },
          [&](const op::MaxSub&) { return monotonize_max_sub(m); },
          [&](const op::MaxSup&) { return monotonize_max_sup(m); },
          [&](const op::OuterCompose& p) { return outer_compose(m, p.other, p.g).value; },
          [&](const op::Multiply& p) { return pointwise_multiply(m, p.other); },
          [&](const op::Lift& p) { return lift(m, p.target); },
          [&](const op::Minor& p) { return minor(m, p.deleted, p.extracted); },
          [&](const op::MeanMinor& p) { return mean_minor(m, p.keep); },
          [&](const op::Coarsen& p) { return coarsen(m, p.sigma); },
          [&](const op::MaxMinor& p) { return max_minor(m, p.keep); },
          [&](const op::Product& p) { return product_compose(m, p.other); },
          [&](const op::LowerModular& p) { return lower_modular_extension(m, p.target); },
          [&](const op::UpperModular& p) { return upper_modular_extension(m, p.target); },
          [&](const op::LowerReplication& p) { return lower_replication(m, p.z, p.target); },
          [&](const op::UpperReplication& p) { return upper_replication(m, p.z, p.target); },
      },
      spec);
}

bool has_model_formula(const TransformSpec& spec) {
  return std::holds_alternative<op::Permute>(spec) || std::holds_alternative<op::Reflect>(spec) ||
         std::holds_alternative<op::Lift>(spec) || std::holds_alternative<op::Minor>(spec) ||
         std::holds_alternative<op::MeanMinor>(spec) || std::holds_alternative<op::Coarsen>(spec) ||
         std::holds_alternative<op::LowerModular>(spec) || std::holds_alternative<op::UpperModular>(spec) ||
         std::holds_alternative<op::LowerReplication>(spec) ||
         std::holds_alternative<op::UpperReplication>(spec);
}

IndependencyModel predict_model(const TransformSpec& spec, const SetFunction& base) {
  if (!has_model_formula(spec)) {
    throw std::domain_error("predict_model: no model formula for transform '" + transform_name(spec) + "'");
  }
  if (!is_supermodular(base)) throw std::domain_error("predict_model: base function is not supermodular");
  const BaseModel bm(base);
  const VariableSet& vars = base.vars();
  const int n = vars.size();

  if (const auto* p = std::get_if<op::Permute>(&spec)) {
    if (p->pi.size() != n) throw std::domain_error("predict_model: permutation size mismatch");
    return build(vars, [&](const ElementaryTriplet& t) {
      return bm.elementary(p->pi(t.a), p->pi(t.b), p->pi.apply(t.c));
    });
  }
  if (std::holds_alternative<op::Reflect>(spec)) {
    return build(vars, [&](const ElementaryTriplet& t) {
      return bm.elementary(t.a, t.b, vars.full() - t.c - singleton(t.a) - singleton(t.b));
    });
  }
  if (const auto* p = std::get_if<op::Lift>(&spec)) {
    if (!vars.is_subset_of(p->target)) throw std::domain_error("predict_model: lift target mismatch");
    const std::uint32_t image = vars.image_in(p->target).bits;
    return build(p->target, [&](const ElementaryTriplet& t) {
      const SubsetMask img(image);
      if (!img.contains(t.a) || !img.contains(t.b)) return true;
      const SubsetMask a = to_source(singleton(t.a), image);
      const SubsetMask b = to_source(singleton(t.b), image);
      return bm.elementary(__builtin_ctz(a.bits), __builtin_ctz(b.bits), to_source(t.c, image));
    });
  }
  if (const auto* p = std::get_if<op::Minor>(&spec)) {
    const SubsetMask keep = vars.full() - (p->deleted | p->extracted);
    const VariableSet target = minor(base, p->deleted, p->extracted).vars();
    return build(target, [&](const ElementaryTriplet& t) {
      const int a = __builtin_ctz(kernels::deposit_bits(1u << t.a, keep.bits));
      const int b = __builtin_ctz(kernels::deposit_bits(1u << t.b, keep.bits));
      return bm.elementary(a, b, SubsetMask(kernels::deposit_bits(t.c.bits, keep.bits)) | p->extracted);
    });
  }
  if (const auto* p = std::get_if<op::MeanMinor>(&spec)) {
    const VariableSet target = mean_minor(base, p->keep).vars();
    const auto rests = subsets_of(vars.full() - p->keep);
    return build(target, [&](const ElementaryTriplet& t) {
      const int a = __builtin_ctz(kernels::deposit_bits(1u << t.a, p->keep.bits));
      const int b = __builtin_ctz(kernels::deposit_bits(1u << t.b, p->keep.bits));
      const SubsetMask c(kernels::deposit_bits(t.c.bits, p->keep.bits));
      for (SubsetMask l : rests) {
        if (!bm.elementary(a, b, c | l)) return false;
      }
      return true;
    });
  }
  if (const auto* p = std::get_if<op::Coarsen>(&spec)) {
    if (!(p->sigma.source() == vars)) throw std::domain_error("predict_model: coarsening source mismatch");
    return build(p->sigma.target(), [&](const ElementaryTriplet& t) {
      return bm.semi_elementary(p->sigma.preimage(singleton(t.a)), p->sigma.preimage(singleton(t.b)),
                                p->sigma.preimage(t.c));
    });
  }
  if (const auto* p = std::get_if<op::LowerModular>(&spec)) {
    int x = 0;
    const std::uint32_t image = single_new_variable(base, p->target, x);
    const SetFunction rl = standardize(base, StandardizationKind::Lower);
    return build(p->target, [&](const ElementaryTriplet& t) {
      const SubsetMask abc = t.c.with(t.a).with(t.b);
      if (!abc.contains(x)) return true;
      if (t.a == x || t.b == x) {
        return rl[to_source(abc.without(x), image)] == rl[to_source(t.c, image)];
      }
      const int a = __builtin_ctz(to_source(singleton(t.a), image).bits);
      const int b = __builtin_ctz(to_source(singleton(t.b), image).bits);
      return bm.elementary(a, b, to_source(t.c.without(x), image));
    });
  }
  if (const auto* p = std::get_if<op::UpperModular>(&spec)) {
    int x = 0;
    const std::uint32_t image = single_new_variable(base, p->target, x);
    const SetFunction ru = standardize(base, StandardizationKind::Upper);
    return build(p->target, [&](const ElementaryTriplet& t) {
      const SubsetMask abc = t.c.with(t.a).with(t.b);
      if (t.c.contains(x)) return true;
      if (t.a == x || t.b == x) {
        return ru[to_source(abc.without(x), image)] == ru[to_source(t.c, image)];
      }
      const int a = __builtin_ctz(to_source(singleton(t.a), image).bits);
      const int b = __builtin_ctz(to_source(singleton(t.b), image).bits);
      return bm.elementary(a, b, to_source(t.c, image));
    });
  }

  const bool lower = std::holds_alternative<op::LowerReplication>(spec);
  const std::string& z = lower ? std::get<op::LowerReplication>(spec).z : std::get<op::UpperReplication>(spec).z;
  const VariableSet& target =
      lower ? std::get<op::LowerReplication>(spec).target : std::get<op::UpperReplication>(spec).target;
  const ReplicaFrame f = replica_frame(base, z, target);
  const SubsetMask fresh(f.fresh);
  const SubsetMask zs(f.z_src);
  // Part of a target mask inside L, as a source mask.
  const auto in_l = [&](SubsetMask s) {
    return SubsetMask(kernels::deposit_bits(kernels::extract_bits(s.bits, f.l_tgt), f.l_src));
  };
  return build(target, [&](const ElementaryTriplet& t) {
    const SubsetMask a = singleton(t.a);
    const SubsetMask b = singleton(t.b);
    const SubsetMask abc = t.c | a | b;
    const SubsetMask ab = a | b;
    if (lower) {
      if (!abc.contains(fresh)) return bm.semi_elementary(in_l(a), in_l(b), in_l(t.c));
      if (t.c.contains(fresh)) return bm.semi_elementary(in_l(a), in_l(b), zs | in_l(t.c));
      if ((t.c & fresh).size() == 1) return bm.semi_elementary(zs, in_l(ab), in_l(t.c));
      return base[zs | in_l(t.c)] == base[in_l(t.c)];
    }
    if (!(t.c & fresh).empty()) return bm.semi_elementary(in_l(a), in_l(b), zs | in_l(t.c));
    if ((abc & fresh).empty()) return bm.semi_elementary(in_l(a), in_l(b), in_l(t.c));
    if ((ab & fresh).size() == 1) return bm.semi_elementary(zs, in_l(ab), in_l(t.c));
    return base[zs | in_l(t.c)] == base[in_l(t.c)];
  });
}

}  // namespace supermod
