// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "loops/extension.hpp"
#include "loops/fischer.hpp"
#include "loops/harness.hpp"
#include "loops/identities.hpp"
#include "loops/morphisms.hpp"
#include "loops/sts.hpp"
#include "loops/tables.hpp"
#include "loops/translations.hpp"
#include "loops/weighted.hpp"

using namespace loops;

namespace {

int failures = 0;

void report(int idx, const char* title, bool ok, const std::string& detail = "") {
  std::printf("ACCEPTANCE %d (%s): %s%s%s\n", idx, title, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

WeightedSteinerLoop constant_weight(const LoopTable& s, const GroupTable& a, Elem t, Elem d) {
  WeightedSteinerLoop w;
  w.s = s;
  w.a = a;
  w.h.assign(s.order(), t);
  w.h[0] = 0;
  w.diag.assign(s.order(), d);
  w.diag[0] = 0;
  return w;
}

// ---- 1: triple-system suite ------------------------------------------------

bool sts_suite() {
  for (int n : {3, 7, 9, 13, 15, 19, 21}) {
    SteinerTripleSystem sts = construct_sts(n);
    if (static_cast<int>(sts.blocks.size()) != n * (n - 1) / 6) return false;
    validate_sts(n, sts.blocks);  // throws on any axiom violation
    LoopTable l = loop_from_sts(sts);
    if (!is_steiner_loop(l)) return false;
    SteinerTripleSystem back = sts_from_loop(l);
    if (back.point_count != n || back.blocks != sts.blocks) return false;
  }
  return true;
}

// ---- 3: group <=> left Bol theorem ----------------------------------------

bool group_left_bol() {
  LoopTable fano = loop_from_sts(construct_sts(7));
  GroupTable z8 = make_cyclic(8);
  for (Elem t = 0; t < 8; ++t)
    for (Elem d = 0; d < 8; ++d) {
      WeightedSteinerLoop w = constant_weight(fano, z8, t, d);
      bool brute = brute_check(build_extension(to_extension_spec(w), false),
                               IdentityName::Associative)
                       .holds;
      Elem t4 = z8.mul(z8.mul(t, t), z8.mul(t, t));
      bool crit = criterion(w, IdentityName::Associative, Variant::Standard).holds;
      if (brute != (d == t4) || crit != brute) return false;
    }

  GroupTable s4 = make_symmetric(4);
  Elem four_cycle = -1;
  for (Elem x = 1; x < 24 && four_cycle < 0; ++x)
    if (element_order(s4, x) == 4) four_cycle = x;
  WeightedSteinerLoop w = constant_weight(loop_from_sts(construct_sts(3)), s4, four_cycle, 0);
  CriterionReport rb = criterion(w, IdentityName::RightBol, Variant::Standard);
  if (!rb.holds || !rb.properness.has_value() || !*rb.properness) return false;
  LoopTable l = build_extension(to_extension_spec(w), false);
  return brute_check(l, IdentityName::RightBol).holds &&
         !brute_check(l, IdentityName::LeftAlternative).holds;
}

// ---- 4: weight-group structure ---------------------------------------------

bool weight_structure(const HarnessReport& rep) {
  // The family sweep asserts that every |S| = 8 instance satisfying the core
  // identity classifies (and re-verifies); any gap lands as a "structure"
  // counterexample, so it suffices that none were recorded and that every
  // observed class is one of the three admissible ones.
  if (rep.structure_instances == 0) return false;
  for (const HarnessCounterexample& c : rep.counterexamples)
    if (c.kind == "structure") return false;
  for (const auto& [name, count] : rep.classification_counts)
    if (name != std::string("ConstantT") && name != std::string("DirectWithZ2") &&
        name != std::string("NonabelianFischer"))
      return false;

  // Constructed direct-with-Z2 instance on the Fano loop over Z4 x Z2.
  WeightedSteinerLoop w;
  w.s = loop_from_sts(construct_sts(7));
  w.a = make_group_by_name("Z4xZ2");
  Elem t = -1;
  for (Elem x = 1; x < 8 && t < 0; ++x)
    if (element_order(w.a, x) == 4) t = x;
  SubsetReport t_span = subgroup_generated(w.a, {t});
  Elem omega = -1;
  for (Elem x = 1; x < 8 && omega < 0; ++x)
    if (element_order(w.a, x) == 2 && !t_span.contains(x)) omega = x;
  if (t < 0 || omega < 0) return false;
  Elem third = w.s.mul(1, 2);
  w.h.assign(8, 0);
  w.diag.assign(8, 0);
  for (Elem x = 1; x < 8; ++x) {
    bool in_u = x == 1 || x == 2 || x == third;
    w.h[x] = in_u ? t : w.a.mul(t, omega);
    w.diag[x] = in_u ? 0 : omega;  // t^4 = e in Z4 x Z2
  }
  if (!check_core_identity(w).holds) return false;
  WeightAnalysis an = analyze_weight_group(w);
  if (!std::holds_alternative<DirectWithZ2>(an.classification)) return false;
  return brute_check(build_extension(to_extension_spec(w)), IdentityName::RightAlternative)
      .holds;
}

// ---- 5: coverings and the distributive quasigroup ---------------------------

WeightedSTS bijective_nine_point() {
  AffineCovering cov = affine_covering(2, 3);
  FischerSpaceResult fs = fischer_space(cov.weighted);
  std::vector<Elem> index_of(cov.weighted.g.order(), -1);
  for (size_t i = 0; i < fs.space.points.size(); ++i)
    index_of[fs.space.points[i]] = static_cast<Elem>(i) + 1;
  std::vector<std::array<Elem, 3>> blocks;
  for (const auto& line : fs.space.lines) {
    std::array<Elem, 3> b{index_of[line[0]], index_of[line[1]], index_of[line[2]]};
    std::sort(b.begin(), b.end());
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  SteinerTripleSystem sts = validate_sts(static_cast<int>(fs.space.points.size()), blocks);
  std::vector<Elem> wts(fs.space.points.size() + 1, 0);
  for (size_t i = 0; i < fs.space.points.size(); ++i) wts[i + 1] = fs.space.points[i];
  return validate_weighted_sts(sts, cov.weighted.g, wts);
}

bool covering_suite() {
  for (auto [s, n] : {std::pair{1, 2}, std::pair{2, 3}}) {
    AffineCovering cov = affine_covering(s, n);  // validates the covering law
    if (!is_restricted_fischer(cov.pair.g, cov.pair.e_set)) return false;
    if (!hall_system_check(fischer_space(cov.weighted).space)) return false;
  }
  MagmaTable q = distributive_quasigroup(bijective_nine_point());
  if (q.n != 9) return false;
  for (Elem x = 0; x < 9; ++x) {
    if (q.at(x, x) != x) return false;
    for (Elem y = 0; y < 9; ++y) {
      if (q.at(x, y) != q.at(y, x)) return false;
      for (Elem z = 0; z < 9; ++z)
        if (q.at(x, q.at(y, z)) != q.at(q.at(x, y), q.at(x, z))) return false;
    }
  }
  return true;
}

// ---- 6: translation groups --------------------------------------------------

bool translation_suite() {
  struct Case {
    std::string group;
    Elem h;
    bool f_central;
  };
  GroupTable s3 = make_symmetric(3), s4 = make_symmetric(4);
  Elem s3_inv = -1, s3_rot = -1, s4_cyc = -1;
  for (Elem x = 1; x < 6; ++x) {
    if (s3_inv < 0 && element_order(s3, x) == 2) s3_inv = x;
    if (s3_rot < 0 && element_order(s3, x) == 3) s3_rot = x;
  }
  for (Elem x = 1; x < 24 && s4_cyc < 0; ++x)
    if (element_order(s4, x) == 4) s4_cyc = x;

  std::vector<std::pair<WeightedSteinerLoop, bool>> cases;  // spec, f_central
  LoopTable s_loop = loop_from_sts(construct_sts(3));
  cases.emplace_back(constant_weight(s_loop, make_cyclic(2), 1, 0), true);
  cases.emplace_back(constant_weight(s_loop, make_cyclic(4), 1, 2), true);
  cases.emplace_back(constant_weight(s_loop, make_elementary_abelian_2(2), 1, 0), true);
  cases.emplace_back(constant_weight(s_loop, s3, s3_inv, 0), true);
  cases.emplace_back(constant_weight(s_loop, s3, s3_rot, 0), false);
  cases.emplace_back(constant_weight(s_loop, s4, s4_cyc, 0), false);

  for (const auto& [w, f_central] : cases) {
    ExtensionSpec spec = to_extension_spec(w);
    TranslationGroupsReport tr = translation_groups(spec);
    bool abelian = w.a.abelian();
    if (tr.a_abelian != abelian || tr.left_equals_right != abelian) return false;
    if (!tr.kernel_is_subgroup || !tr.kernel_isomorphic_to_a || !tr.kernel_normal)
      return false;
    if (!tr.order_product_ok) return false;
    if (tr.g_left.size() >= 100000 || tr.g_right.size() >= 100000 ||
        tr.g_full.size() >= 100000)
      return false;
    IotaReport io = iota_maps(spec);
    if (io.f_central != f_central || io.all_automorphisms != f_central) return false;
    if (f_central) {
      DecompositionReport dec = full_group_decomposition(spec);
      if (!dec.generated_equal || !dec.rho_decomposition_ok) return false;
    }
  }
  return true;
}

// ---- 7: morphism suite -------------------------------------------------------

bool morphism_suite() {
  LoopTable s_loop = loop_from_sts(construct_sts(3));

  WeightedSteinerLoop triv = constant_weight(s_loop, make_cyclic(2), 0, 0);
  AutGroupReport rep = automorphism_group(triv);
  if (rep.psi.size() != 4 || !rep.psi_closed || !rep.psi_elementary_abelian_2 ||
      !rep.psi_sigma_trivial)
    return false;
  ExtensionSpec triv_spec = to_extension_spec(triv);
  LoopTable triv_table = build_extension(triv_spec);
  for (const MorphismWitness& m : rep.full)
    if (!is_table_isomorphism(witness_point_map(m, triv_spec, triv_spec), triv_table,
                              triv_table))
      return false;

  // rho-twisted pair over Z4: isomorphic, detected with and without pruning.
  WeightedSteinerLoop w1 = constant_weight(s_loop, make_cyclic(4), 1, 2);
  ExtensionSpec spec1 = to_extension_spec(w1);
  std::vector<Elem> rho = {0, 1, 0, 0};
  ExtensionSpec spec2 = spec1;
  for (Elem x = 1; x < 4; ++x)
    for (Elem y = 1; y < 4; ++y) {
      Elem z = spec1.s.mul(x, y);
      spec2.f[static_cast<size_t>(x) * 4 + y] =
          spec1.a.mul(spec1.a.inv(spec1.a.mul(rho[x], rho[y])),
                      spec1.a.mul(rho[z], spec1.fv(x, y)));
    }
  FindOptions no_prune;
  no_prune.prune = false;
  auto found = find_isomorphisms(spec1, spec2);
  if (found.empty() || find_isomorphisms(spec1, spec2, no_prune) != found) return false;

  // Commutator-obstructed pair over S3: non-isomorphic either way.
  GroupTable s3 = make_symmetric(3);
  std::vector<Elem> invs, rots;
  for (Elem x = 1; x < 6; ++x)
    (element_order(s3, x) == 2 ? invs : rots).push_back(x);
  WeightedSteinerLoop o1 = constant_weight(s_loop, s3, 0, 0);
  o1.h = {0, invs[0], invs[1], invs[2]};
  WeightedSteinerLoop o2 = constant_weight(s_loop, s3, rots[0], 0);
  ExtensionSpec os1 = to_extension_spec(o1), os2 = to_extension_spec(o2);
  return find_isomorphisms(os1, os2).empty() &&
         find_isomorphisms(os1, os2, no_prune).empty();
}

// ---- 8: star-variant negativity ----------------------------------------------

bool star_negativity() {
  GroupTable s3 = make_symmetric(3);
  std::vector<Elem> invs;
  for (Elem x = 1; x < 6; ++x)
    if (element_order(s3, x) == 2) invs.push_back(x);
  WeightedSteinerLoop w = constant_weight(loop_from_sts(construct_sts(3)), s3, 0, 0);
  w.h = {0, invs[0], invs[1], invs[2]};
  if (!star_all_fail_applies(w)) return false;
  LoopTable star = build_extension(to_extension_spec(w, Variant::Star));
  for (IdentityName id : kTenIdentities)
    if (brute_check(star, id).holds) return false;
  return true;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok1 = sts_suite();
  double sec1 = seconds_since(t0);
  report(1, "Steiner triple system suite", ok1 && sec1 < 1.0,
         "ran in " + std::to_string(sec1) + " s (budget 1 s)");

  HarnessConfig cfg;
  t0 = std::chrono::steady_clock::now();
  HarnessReport rep = run_harness(cfg);
  double sec2 = seconds_since(t0);
  report(2, "brute-vs-criterion sweep over the shipped family", rep.ok() && sec2 < 600.0,
         std::to_string(rep.instances) + " instances, " + std::to_string(rep.comparisons) +
             " comparisons, " + std::to_string(rep.counterexample_count) +
             " disagreements, " + std::to_string(sec2) + " s (budget 600 s)");

  report(3, "group iff left Bol on constant weights", group_left_bol());
  report(4, "weight-group classification", weight_structure(rep));
  report(5, "coverings, Hall condition, distributive quasigroup", covering_suite());
  report(6, "translation-group structure on six specs", translation_suite());
  report(7, "morphism parametrization and isomorphism search", morphism_suite());
  report(8, "star-variant failure of all ten laws", star_negativity());

  HarnessReport rerun = run_harness(cfg);
  report(9, "determinism of the sweep under a fixed seed",
         report_to_json(rerun) == report_to_json(rep));

  return failures == 0 ? 0 : 1;
}
