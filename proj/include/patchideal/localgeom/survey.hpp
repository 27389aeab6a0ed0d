#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "patchideal/localgeom/local.hpp"
#include "patchideal/patches/recenter.hpp"
#include "patchideal/patches/richardson.hpp"

namespace patchideal {

// fn applied to every item on up to `jobs` threads; results keep item order.
// The first exception by item index is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, unsigned jobs, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
      try {
        slots[k].emplace(fn(items[k]));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline const Permutation& pattern_123() {
  static const Permutation p({1, 2, 3});
  return p;
}
inline const Permutation& pattern_2143() {
  static const Permutation p({2, 1, 4, 3});
  return p;
}
inline const Permutation& pattern_321() {
  static const Permutation p({3, 2, 1});
  return p;
}

inline bool contains_123_or_2143(const Permutation& w) {
  return contains_pattern(w, pattern_123()) || contains_pattern(w, pattern_2143());
}

// The parabolic points of Pet_n that are smooth: w_0, 1 n n-1 ... 2, and n-1 ... 1 n.
inline std::vector<Permutation> peterson_smooth_list(int n) {
  std::vector<Permutation> out{Permutation::longest(n)};
  std::vector<int> a{1}, b;
  for (int k = n; k >= 2; --k) a.push_back(k);
  for (int k = n - 1; k >= 1; --k) b.push_back(k);
  b.push_back(n);
  out.emplace_back(a);
  out.emplace_back(b);
  return out;
}

struct PetersonSurveyRow {
  Composition composition;
  Permutation w;
  bool singularPattern = false;
  bool singularList = false;
  bool singularJacobian = false;
  std::size_t jacobianRank = 0;
};

// Pattern, list and Jacobian verdicts at every parabolic point of Pet_n;
// throws consistency_error if they ever disagree.
inline std::vector<PetersonSurveyRow> peterson_singular_survey(int n, unsigned jobs = 1) {
  if (n < 2) throw std::invalid_argument("survey needs n >= 2");
  auto smooth = peterson_smooth_list(n);
  auto rows = parallel_map(enumerate_parabolics(n), jobs, [&](const ParabolicPoint& p) {
    PetersonSurveyRow r{p.composition, p.w};
    r.singularPattern = contains_123_or_2143(p.w);
    r.singularList = std::find(smooth.begin(), smooth.end(), p.w) == smooth.end();
    auto G = peterson_generators(p.w);
    auto jac = jacobian_at(G, origin(G.chart), static_cast<std::size_t>(n - 1));
    r.jacobianRank = jac.rank;
    r.singularJacobian = !jac.smooth;
    return r;
  });
  for (const auto& r : rows)
    if (r.singularPattern != r.singularList || r.singularList != r.singularJacobian)
      throw consistency_error("singularity verdicts disagree at w_P = " + r.w.str() + " (pattern " +
                              std::to_string(r.singularPattern) + ", list " + std::to_string(r.singularList) +
                              ", Jacobian " + std::to_string(r.singularJacobian) + ")");
  return rows;
}

struct PetersonSchubertStratum {
  Permutation wQ;
  std::vector<Permutation> blocks;
  bool singularBlocks = false;
  bool singularJacobian = false;
  std::size_t jacobianRank = 0;
  std::size_t codimension = 0;
};

struct PetersonSchubertSurvey {
  Permutation wP;
  Composition composition;
  bool singular321 = false;
  std::vector<PetersonSchubertStratum> strata;
};

inline PetersonSchubertSurvey peterson_schubert_survey(const Permutation& wP, unsigned jobs = 1) {
  auto c = composition_of(wP);
  if (!c) throw precondition_error("w_P = " + wP.str() + " is not a parabolic longest element");
  int n = wP.n();
  PetersonSchubertSurvey s{wP, *c, contains_pattern(wP, pattern_321()), {}};
  std::vector<Permutation> below;
  for (const auto& p : enumerate_parabolics(n))
    if (bruhat_leq(p.w, wP)) below.push_back(p.w);
  std::size_t dim = static_cast<std::size_t>(n) - c->size();
  s.strata = parallel_map(below, jobs, [&](const Permutation& wQ) {
    PetersonSchubertStratum st;
    st.wQ = wQ;
    auto blocks = block_split(wQ, *c);
    if (!blocks) throw consistency_error("w_Q = " + wQ.str() + " <= w_P but is not block diagonal");
    st.blocks = *blocks;
    st.singularBlocks = std::any_of(blocks->begin(), blocks->end(), contains_123_or_2143);
    auto G = peterson_schubert_generators(wQ, wP);
    auto jac = jacobian_at(G, origin(G.chart), dim);
    st.jacobianRank = jac.rank;
    st.codimension = jac.nVars - dim;
    st.singularJacobian = !jac.smooth;
    return st;
  });
  bool anySingular = false;
  for (const auto& st : s.strata) {
    if (st.singularBlocks != st.singularJacobian)
      throw consistency_error("Peterson-Schubert verdicts disagree at w_Q = " + st.wQ.str() + " in R_" + wP.str());
    anySingular = anySingular || st.singularJacobian;
  }
  if (anySingular != s.singular321)
    throw consistency_error("321-pattern verdict disagrees with the strata for R_" + wP.str());
  return s;
}

struct ProbeSample {
  GroupPoint b;
  IntPoly h;
  std::int64_t mult = 0;
  bool multWithinBound = true;
  bool hNonnegative = true;
};

struct ProbeReport {
  Permutation wP;
  std::uint64_t seed = 0;
  IntPoly baseH;
  std::int64_t baseMult = 0;
  std::vector<ProbeSample> samples;
  bool allMultWithinBound = true;
  bool allHNonnegative = true;
  bool hConstant = true;
  std::vector<std::string> findings;
};

// Draws group points with parameters uniform in {-3..3}, not all zero.
inline std::vector<GroupPoint> probe_points(const Composition& c, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t m = static_cast<std::size_t>(c.n()) - c.size();
  std::vector<GroupPoint> out;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> q(m, 0);
    if (m > 0) {
      bool zero = true;
      while (zero) {
        zero = true;
        for (auto& v : q) {
          v = static_cast<long>(rng() % 7) - 3;
          zero = zero && v == 0;
        }
      }
    }
    out.push_back(GroupPoint::from_flat(c, q));
  }
  return out;
}

inline ProbeReport semicontinuity_probe(const Permutation& wP, std::size_t samples, std::uint64_t seed,
                                        unsigned jobs = 1) {
  auto c = composition_of(wP);
  if (!c) throw precondition_error("w_P = " + wP.str() + " is not a parabolic longest element");
  if (samples < 1) throw std::invalid_argument("probe needs at least one sample");
  std::size_t dim = static_cast<std::size_t>(wP.n() - 1);
  auto G = peterson_generators(wP);
  auto base = local_report(G, dim);
  ProbeReport rep{wP, seed, base.h(), base.multiplicity(), {}, true, true, true, {}};
  auto points = probe_points(*c, samples, seed);
  rep.samples = parallel_map(points, jobs, [&](const GroupPoint& b) {
    auto R = local_report(recenter(G, b), dim, b.str() + "." + wP.str());
    ProbeSample s{b, R.h(), R.multiplicity()};
    s.multWithinBound = s.mult <= rep.baseMult;
    s.hNonnegative = std::all_of(s.h.coeffs().begin(), s.h.coeffs().end(), [](std::int64_t v) { return v >= 0; });
    return s;
  });
  for (const auto& s : rep.samples) {
    if (!s.multWithinBound) {
      rep.allMultWithinBound = false;
      rep.findings.push_back("FINDING: multiplicity " + std::to_string(s.mult) + " at b = " + s.b.str() +
                             " exceeds " + std::to_string(rep.baseMult) + " at w_P B");
    }
    if (!s.hNonnegative) {
      rep.allHNonnegative = false;
      rep.findings.push_back("FINDING: negative h-coefficient at b = " + s.b.str() + ": " + s.h.str());
    }
    if (!(s.h == rep.baseH)) rep.hConstant = false;
  }
  return rep;
}

}  // namespace patchideal
