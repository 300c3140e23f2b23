#include "loops/harness.hpp"

#include <random>
#include <sstream>

#include "loops/errors.hpp"
#include "loops/extension.hpp"
#include "loops/sts.hpp"
#include "loops/weighted.hpp"

namespace loops {

namespace {

const IdentityName kStandardSchemas[] = {
    IdentityName::Flexible,          IdentityName::LeftAlternative,
    IdentityName::RightAlternative,  IdentityName::LeftInverseProperty,
    IdentityName::RightInverseProperty, IdentityName::CrossInverse,
    IdentityName::AutomorphicInverse, IdentityName::WeakInverse,
    IdentityName::LeftBol,           IdentityName::RightBol,
    IdentityName::Moufang,           IdentityName::Associative,
};

const IdentityName kStarStarSchemas[] = {
    IdentityName::LeftAlternative,
    IdentityName::LeftInverseProperty,
    IdentityName::LeftBol,
};

struct Runner {
  const HarnessConfig& cfg;
  HarnessReport& rep;
  std::string s_name, a_name;
  WeightedSteinerLoop w;  // h and diag rewritten per instance
  std::vector<Elem> lam, rho;

  void record(const std::string& kind, const std::string& variant, const std::string& identity,
              bool brute, bool crit) {
    ++rep.counterexample_count;
    if (rep.counterexamples.size() < cfg.max_recorded)
      rep.counterexamples.push_back(
          {kind, s_name, a_name, variant, identity, w.h, w.diag, brute, crit});
  }

  void check_instance() {
    ++rep.instances;
    ExtensionSpec spec = to_extension_spec(w, Variant::Standard);

    bool b[14] = {};
    {
      LoopTable table = build_extension(spec, false);
      one_sided_inverses(table, lam, rho);
      for (IdentityName id : kStandardSchemas) {
        bool brute = brute_check(table, id, lam, rho).holds;
        bool crit = criterion(w, id, Variant::Standard).holds;
        ++rep.comparisons;
        b[static_cast<int>(id)] = brute;
        if (brute != crit) record("iff", "standard", identity_name(id), brute, crit);
      }
      // Cross-identity facts the propositions assert for every instance.
      auto bit = [&](IdentityName id) { return b[static_cast<int>(id)]; };
      if (bit(IdentityName::LeftAlternative) && !bit(IdentityName::RightAlternative))
        record("invariant", "standard", "left_alternative=>right_alternative", true, false);
      if (bit(IdentityName::CrossInverse)) {
        bool conseq = table.commutative() && bit(IdentityName::LeftAlternative) &&
                      bit(IdentityName::RightAlternative) &&
                      bit(IdentityName::LeftInverseProperty) &&
                      bit(IdentityName::RightInverseProperty);
        if (!conseq) record("invariant", "standard", "cross_inverse=>commutative+alt+ip", true, false);
      }
      if (bit(IdentityName::AutomorphicInverse) && !table.commutative())
        record("invariant", "standard", "automorphic_inverse=>commutative", true, false);
      bool alt = bit(IdentityName::LeftAlternative) && bit(IdentityName::RightAlternative);
      bool ip = bit(IdentityName::LeftInverseProperty) && bit(IdentityName::RightInverseProperty);
      if ((alt || ip) && !bit(IdentityName::WeakInverse))
        record("invariant", "standard", "alternative-or-ip=>weak_inverse", true, false);
    }

    {
      spec.variant = Variant::StarStar;
      LoopTable table = build_extension(spec, false);
      one_sided_inverses(table, lam, rho);
      for (IdentityName id : kStarStarSchemas) {
        bool brute = brute_check(table, id, lam, rho).holds;
        bool crit = criterion(w, id, Variant::StarStar).holds;
        ++rep.comparisons;
        if (brute != crit) record("iff", "starstar", identity_name(id), brute, crit);
      }
    }

    if (star_all_fail_applies(w)) {
      ++rep.star_instances;
      spec.variant = Variant::Star;
      LoopTable table = build_extension(spec, false);
      one_sided_inverses(table, lam, rho);
      for (IdentityName id : kTenIdentities) {
        ++rep.comparisons;
        bool brute = brute_check(table, id, lam, rho).holds;
        // Flexibility alone can survive a noncentral factor system, in the
        // degenerate case covered by its own criterion; the other nine must
        // always fail here.
        bool predicted =
            id == IdentityName::Flexible && star_flexible_criterion(w);
        if (brute != predicted) record("star", "star", identity_name(id), brute, predicted);
      }
    }

    if (w.s.order() == 8 && check_core_identity(w).holds) {
      ++rep.structure_instances;
      try {
        WeightAnalysis an = analyze_weight_group(w);
        const char* name = classification_name(an.classification);
        ++rep.classification_counts[name];
        if (std::holds_alternative<Unstructured>(an.classification))
          record("structure", "standard", "unclassified-core-instance", true, false);
      } catch (const Error& e) {
        record("structure", "standard", std::string("hypothesis-failed:") + e.what(), true, false);
      }
    }
  }
};

}  // namespace

HarnessReport run_harness(const HarnessConfig& cfg) {
  HarnessReport rep;
  rep.seed = cfg.seed;

  std::vector<std::pair<std::string, LoopTable>> steiners;
  if (cfg.order4) steiners.emplace_back("order4", loop_from_sts(construct_sts(3)));
  if (cfg.fano) steiners.emplace_back("fano", loop_from_sts(construct_sts(7)));

  std::uint64_t cell_index = 0;
  for (const auto& [sname, sloop] : steiners) {
    for (const std::string& gname : cfg.groups) {
      GroupTable a = make_group_by_name(gname);
      const int na = a.order();
      const int ns = sloop.order();
      std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (cell_index + 1)));
      ++cell_index;

      Runner run{cfg, rep, sname, gname,
                 WeightedSteinerLoop{sloop, a, std::vector<Elem>(ns, 0),
                                     std::vector<Elem>(ns, 0)},
                 {}, {}};
      long long cell_count = 0;

      auto run_h = [&](const std::vector<Elem>& h) {
        run.w.h = h;
        // Diagonal prescribed by the core identity, using the least other point.
        std::vector<Elem> prescribed(ns, 0);
        for (Elem x = 1; x < ns; ++x) {
          Elem y = (x == 1) ? 2 : 1;
          prescribed[x] =
              a.mul(a.mul(a.mul(h[x], h[y]), h[x]), h[run.w.s.mul(x, y)]);
        }
        run.w.diag = prescribed;
        run.check_instance();
        ++cell_count;
        run.w.diag.assign(ns, 0);
        run.check_instance();
        ++cell_count;
        for (int r = 0; r < cfg.random_diags; ++r) {
          for (Elem x = 1; x < ns; ++x)
            run.w.diag[x] = static_cast<Elem>(rng() % static_cast<std::uint64_t>(na));
          run.check_instance();
          ++cell_count;
        }
      };

      if (na <= 6) {
        std::vector<Elem> h(ns, 0);
        // odometer over the assignments of points 1..ns-1
        while (true) {
          run_h(h);
          int p = 1;
          while (p < ns && ++h[p] == na) h[p++] = 0;
          if (p == ns) break;
        }
      } else {
        std::vector<Elem> h(ns, 0);
        for (int i = 0; i < cfg.samples; ++i) {
          for (Elem x = 1; x < ns; ++x)
            h[x] = static_cast<Elem>(rng() % static_cast<std::uint64_t>(na));
          run_h(h);
        }
      }
      rep.per_cell_instances[sname + "/" + gname] = cell_count;
    }
  }
  return rep;
}

std::string report_to_json(const HarnessReport& r) {
  std::ostringstream os;
  auto list = [&os](const std::vector<Elem>& v) {
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  os << "{\"seed\":" << r.seed << ",\"instances\":" << r.instances
     << ",\"comparisons\":" << r.comparisons << ",\"star_instances\":" << r.star_instances
     << ",\"structure_instances\":" << r.structure_instances << ",\"classifications\":{";
  bool first = true;
  for (const auto& [k, v] : r.classification_counts) {
    os << (first ? "" : ",") << "\"" << k << "\":" << v;
    first = false;
  }
  os << "},\"cells\":{";
  first = true;
  for (const auto& [k, v] : r.per_cell_instances) {
    os << (first ? "" : ",") << "\"" << k << "\":" << v;
    first = false;
  }
  os << "},\"counterexample_count\":" << r.counterexample_count << ",\"counterexamples\":[";
  for (size_t i = 0; i < r.counterexamples.size(); ++i) {
    const auto& c = r.counterexamples[i];
    os << (i ? "," : "") << "{\"kind\":\"" << c.kind << "\",\"s\":\"" << c.s_name << "\",\"a\":\""
       << c.a_name << "\",\"variant\":\"" << c.variant << "\",\"identity\":\"" << c.identity
       << "\",\"h\":";
    list(c.h);
    os << ",\"diag\":";
    list(c.diag);
    os << ",\"brute\":" << (c.brute ? "true" : "false")
       << ",\"criterion\":" << (c.criterion ? "true" : "false") << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace loops
