#include "cfhom_cli/commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cfhom/chain_complex.hpp"
#include "cfhom/error.hpp"
#include "cfhom/io.hpp"
#include "cfhom/modpr.hpp"
#include "cfhom/stability.hpp"
#include "cfhom/transfer.hpp"
#include "cfhom_cli/report.hpp"

namespace cfhom::cli {

namespace {

const char* const kRefStableRange =
    "stable range f(k,M,R): k if 2 is a unit in R and dim M >= 3; k for a non-orientable surface and R a field of "
    "characteristic 0; k-1 for an orientable surface and such R; floor(k/2) otherwise";
const char* const kRefPeriodicity =
    "eventual periodicity: H_i(C_k(M);Z/d) = H_i(C_{k+m}(M);Z/d) for dim M even, d | 2m, i <= f(k,M,Z/d)";
const char* const kRefStability = "integral stability: H_i(C_k(M);Z) = H_i(C_{k+1}(M);Z) for dim M odd, i <= f(k,M,Z)";
const char* const kRefCensus =
    "in the stable range H_i(C_k(M);Z/p^r) takes at most r+1 isomorphism types, determined by v_p(2k - chi(M))";
const char* const kRefSphere = "H_1(C_k(S^2)) = Z/(2k-2) for k >= 2";
const char* const kRefCone =
    "cofiber sequence: #H_i(cone f;Z/q) = #coker(f_*: H_i(S;Z/q) -> H_i(T;Z/q)) * #ker(f_*: H_{i-1}(S;Z/q) -> "
    "H_{i-1}(T;Z/q))";
const char* const kRefUct = "universal coefficients: H_i(C;Z/q) = H_i(C) (x) Z/q + Tor(H_{i-1}(C), Z/q)";
const char* const kRefCardinalities =
    "cardinalities #H_j(C (x) Z/p^w), w <= r, determine C (x) Z/p^r as a sum of elementary complexes A^(s)";
const char* const kRefBrowder =
    "phi(P,P^m) = m P^{m-1} phi(P,P), phi(P,P) = 2 g in H_{n-1}(RP^{n-1}) for n even; "
    "vanishes mod d when d | 2m, and always for n odd";
const char* const kRefDold =
    "tau^2_{k,l} o Q_* = iota o tau^1_{k,l-1} + Q_* o tau^1_{k-1,l-1} on configurations of size l-1";

struct IntRange64 {
  long first = 0;
  long last = 0;
};

IntRange64 parse_range(const std::string& text, const std::string& what) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    IntRange64 r;
    r.first = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    r.last = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (r.first > r.last) throw Error(what + ": empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw Error(what + ": expected an integer or a range like 2..50, got '" + text + "'");
  }
}

std::string echo(const std::vector<std::string>& args) {
  std::string s = "cfhom";
  for (const auto& a : args) s += " " + a;
  return s;
}

std::string str(const Integer& x) { return cfhom::to_string(x); }
std::string str(long x) { return std::to_string(x); }

Status to_status(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return Status::pass;
    case CheckStatus::fail: return Status::fail;
    case CheckStatus::skipped: return Status::skipped;
  }
  return Status::skipped;
}

void add_check_rows(Report& rep, const CheckReport& check) {
  rep.columns = {"degree", "k", "k'", "H at k", "H at k'", "note"};
  for (const auto& e : check.entries) {
    const bool have = e.status != CheckStatus::skipped;
    rep.add_row({str(e.degree), str(e.k), str(e.k_other), have ? e.lhs.to_string() : "", have ? e.rhs.to_string() : "",
                 e.note},
                to_status(e.status));
  }
  if (check.outside_stable_range > 0)
    rep.notes.push_back(std::to_string(check.outside_stable_range) + " (degree, k) pairs lie above the stable range");
}

// Options shared by every subcommand.
struct Common {
  std::string format = "table";
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cfhom - exact homology of chain complexes, mod p^r reconstruction and stability checks", "cfhom"};
  app.require_subcommand(1, 1);
  Common common;
  std::function<Report()> action;

  // homology
  std::string complex_path;
  auto* homology = app.add_subcommand("homology", "Integral homology of a complex over Z");
  homology->add_option("complex", complex_path, "*.complex.json")->required();
  add_common(homology, common);
  homology->callback([&] {
    action = [&] {
      const auto c = io::read_complex(complex_path);
      Report rep;
      rep.columns = {"degree", "rank C", "H"};
      const auto h = integral_homology(c);
      for (int d = c.base_degree(); d <= c.top_degree(); ++d) rep.add_row({str(d), str(long(c.rank(d))), h.at(d).to_string()});
      return rep;
    };
  });

  // homology-modq
  std::string q_text;
  bool oracle = false;
  auto* modq = app.add_subcommand("homology-modq", "Homology with Z/q coefficients via universal coefficients");
  modq->add_option("complex", complex_path, "*.complex.json")->required();
  modq->add_option("--q", q_text, "Modulus q >= 2")->required();
  modq->add_flag("--oracle", oracle, "Cross-check cardinalities by exhaustive enumeration");
  add_common(modq, common);
  modq->callback([&] {
    action = [&] {
      const auto c = io::read_complex(complex_path);
      const Integer q = parse_integer(q_text);
      Report rep;
      rep.references = {kRefUct};
      rep.columns = {"degree", "H", "order"};
      const auto h = mod_q_homology(c, q);
      std::optional<GradedCardinalities> brute;
      if (oracle) {
        brute = brute_force_mod_q_homology(c, q);
        rep.columns.push_back("enumerated");
      }
      for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
        const Integer n = *group_cardinality(h.at(d));
        std::vector<std::string> row{str(d), h.at(d).to_string(), str(n)};
        std::optional<Status> st;
        if (brute) {
          row.push_back(str(brute->at(d)));
          st = brute->at(d) == n ? Status::pass : Status::fail;
        }
        rep.add_row(std::move(row), st);
      }
      return rep;
    };
  });

  // cardinalities
  std::string p_text;
  unsigned level = 1;
  std::string output_path;
  auto* cards = app.add_subcommand("cardinalities", "Table of #H_i(C (x) Z/p^w) for w <= r");
  cards->add_option("complex", complex_path, "*.complex.json")->required();
  cards->add_option("--p", p_text, "Prime p")->required();
  cards->add_option("--r", level, "Top level r >= 1")->required()->check(CLI::PositiveNumber);
  cards->add_option("--output", output_path, "Write the table as *.cardinalities.json");
  add_common(cards, common);
  cards->callback([&] {
    action = [&] {
      const auto c = io::read_complex(complex_path);
      const auto table = cardinality_table(c, parse_integer(p_text), level);
      if (!output_path.empty()) {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) throw Error("cannot write " + output_path);
        f << io::serialize_cardinalities(table);
      }
      Report rep;
      rep.columns = {"degree", "w", "order"};
      for (const auto& [d, row] : table.values)
        for (const auto& [w, v] : row) rep.add_row({str(d), str(long(w)), str(v)});
      if (!output_path.empty()) rep.notes.push_back("wrote " + output_path);
      return rep;
    };
  });

  // reconstruct
  std::string table_path;
  auto* recon = app.add_subcommand("reconstruct", "Groups H_i(C (x) Z/p^r) from a cardinality table");
  recon->add_option("table", table_path, "*.cardinalities.json")->required();
  add_common(recon, common);
  recon->callback([&] {
    action = [&] {
      const auto table = io::read_cardinalities(table_path);
      const auto profile = solve_profile(table);
      const auto groups = reconstruct_mod_pr(table);
      Report rep;
      rep.references = {kRefCardinalities};
      rep.columns = {"degree", "H"};
      for (int d = groups.base_degree; d <= groups.top_degree(); ++d) rep.add_row({str(d), groups.at(d).to_string()});
      for (const auto& [key, n] : profile.counts())
        rep.notes.push_back("a_" + std::to_string(key.first) + "^(" + std::to_string(key.second) + ") = " + std::to_string(n));
      return rep;
    };
  });

  // reconstruct-integral
  std::vector<std::string> table_paths;
  auto* recon_z = app.add_subcommand("reconstruct-integral", "Integral homology from one cardinality table per prime");
  recon_z->add_option("tables", table_paths, "*.cardinalities.json, one per prime")->required();
  add_common(recon_z, common);
  recon_z->callback([&] {
    action = [&] {
      std::vector<CardinalityTable> tables;
      for (const auto& p : table_paths) tables.push_back(io::read_cardinalities(p));
      const auto groups = reconstruct_integral(tables);
      Report rep;
      rep.references = {kRefCardinalities};
      rep.columns = {"degree", "H"};
      for (int d = groups.base_degree; d <= groups.top_degree(); ++d) rep.add_row({str(d), groups.at(d).to_string()});
      for (const auto& t : tables)
        rep.notes.push_back("p = " + str(t.p) + " read at level " + std::to_string(t.max_level) +
                            ": torsion Z/p^t with t >= " + std::to_string(t.max_level) + " would need a higher level");
      return rep;
    };
  });

  // decompose
  std::string reduce_text;
  auto* decomp = app.add_subcommand("decompose", "Split a complex over Z/p^r into elementary complexes");
  decomp->add_option("complex", complex_path, "*.complex.json")->required();
  decomp->add_option("--q", reduce_text, "Reduce an integral complex mod q first");
  add_common(decomp, common);
  decomp->callback([&] {
    action = [&] {
      auto c = io::read_complex(complex_path);
      if (!reduce_text.empty()) c = c.reduced_mod(parse_integer(reduce_text));
      std::vector<DecompositionProfile> profiles;
      if (c.modulus() >= 2 && !as_prime_power(c.modulus()))
        profiles = elementary_decompose_crt(c);
      else
        profiles.push_back(elementary_decompose(c));
      Report rep;
      rep.references = {kRefCardinalities};
      rep.columns = {"p", "r", "degree", "s", "count"};
      for (const auto& prof : profiles)
        for (const auto& [key, n] : prof.counts())
          rep.add_row({str(prof.p()), str(long(prof.level())), str(key.first), str(long(key.second)), str(long(n))});
      return rep;
    };
  });

  // cone-check
  std::string map_path;
  std::vector<std::string> cone_q{"2", "3", "4", "9"};
  long random_count = 0;
  std::uint64_t seed = 1;
  auto* cone = app.add_subcommand("cone-check", "Cardinality identity of the long exact sequence of a mapping cone");
  cone->add_option("chainmap", map_path, "*.chainmap.json");
  cone->add_option("--q", cone_q, "Moduli (repeat or comma separated)")->delimiter(',');
  cone->add_option("--random", random_count, "Check this many random chain maps instead of a file");
  cone->add_option("--seed", seed, "Seed for --random");
  add_common(cone, common);
  cone->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, ChainMap>> maps;
      if (random_count > 0) {
        RandomComplexParams params;
        params.torsion_primes = {2, 3};
        for (long i = 0; i < random_count; ++i) {
          const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
          const auto src = random_complex(params, 3 * s);
          const auto tgt = random_complex(params, 3 * s + 1);
          maps.emplace_back("random#" + std::to_string(i), random_chain_map(src, tgt, 3 * s + 2));
        }
      } else if (!map_path.empty()) {
        maps.emplace_back(map_path, io::read_chain_map(map_path));
      } else {
        throw Error("cone-check needs a chain map file or --random N");
      }
      Report rep;
      rep.references = {kRefCone};
      rep.columns = {"map", "q", "degree", "#H(cone)", "#coker", "#ker"};
      for (const auto& [name, f] : maps)
        for (const auto& qt : cone_q) {
          const auto les = les_cardinality_check(f, parse_integer(qt));
          for (const auto& d : les.degrees)
            rep.add_row({name, qt, str(d.degree), str(d.cone), str(d.cokernel), str(d.kernel)},
                        d.holds ? Status::pass : Status::fail);
        }
      return rep;
    };
  });

  // stable-range
  std::string k_text = "0..10";
  int dim = 2;
  bool non_orientable = false, surface = false, open = false;
  std::string ring_text = "Z";
  auto* sr = app.add_subcommand("stable-range", "Stable range f(k, M, R)");
  sr->add_option("--k", k_text, "k or a range a..b");
  sr->add_option("--dim", dim, "Dimension of M")->check(CLI::PositiveNumber);
  sr->add_flag("--non-orientable", non_orientable, "M is not orientable");
  sr->add_flag("--surface", surface, "M is a surface");
  sr->add_flag("--open", open, "M is open");
  sr->add_option("--ring", ring_text, "Z, Q, Z[1/2] or Z/q");
  add_common(sr, common);
  sr->callback([&] {
    action = [&] {
      ManifoldDescriptor m;
      m.dim = dim;
      m.orientable = !non_orientable;
      m.surface = surface;
      m.open = open;
      m.validate();
      const auto ring = RingDescriptor::parse(ring_text);
      const auto ks = parse_range(k_text, "--k");
      Report rep;
      rep.references = {kRefStableRange};
      rep.columns = {"k", "ring", "f"};
      for (long k = ks.first; k <= ks.last; ++k) rep.add_row({str(k), ring.to_string(), str(stable_range(k, m, ring))});
      return rep;
    };
  });

  // periodicity
  std::string family_path;
  long period = 1;
  std::string d_text;
  std::string degree_text = "1";
  auto* per = app.add_subcommand("periodicity", "Check H_i(C_k;Z/d) = H_i(C_{k+m};Z/d) on a family (even dim)");
  per->add_option("--family", family_path, "*.family.json")->required();
  per->add_option("--m", period, "Period m")->required();
  per->add_option("--d", d_text, "Modulus d dividing 2m")->required();
  per->add_option("--degree", degree_text, "Degree i or range");
  per->add_option("--k", k_text, "k range, e.g. 2..50")->required();
  add_common(per, common);
  per->callback([&] {
    action = [&] {
      const auto fam = io::read_family(family_path);
      const auto ks = parse_range(k_text, "--k");
      const auto ds = parse_range(degree_text, "--degree");
      const auto check = check_periodicity_even(fam, period, parse_integer(d_text), {ks.first, ks.last}, {ds.first, ds.last});
      Report rep;
      rep.references = {kRefPeriodicity};
      add_check_rows(rep, check);
      return rep;
    };
  });

  // stability
  auto* stab = app.add_subcommand("stability", "Check H_i(C_k;Z) = H_i(C_{k+1};Z) on a family (odd dim)");
  stab->add_option("--family", family_path, "*.family.json")->required();
  stab->add_option("--degree", degree_text, "Degree i or range");
  stab->add_option("--k", k_text, "k range")->required();
  add_common(stab, common);
  stab->callback([&] {
    action = [&] {
      const auto fam = io::read_family(family_path);
      const auto ks = parse_range(k_text, "--k");
      const auto ds = parse_range(degree_text, "--degree");
      const auto check = check_stability_odd(fam, {ks.first, ks.last}, {ds.first, ds.last});
      Report rep;
      rep.references = {kRefStability};
      add_check_rows(rep, check);
      return rep;
    };
  });

  // census
  int census_degree = 1;
  auto* census = app.add_subcommand("census", "Isomorphism types of H_i(C_k;Z/p^r) across k");
  census->add_option("--family", family_path, "*.family.json")->required();
  census->add_option("--degree", census_degree, "Degree i");
  census->add_option("--p", p_text, "Prime p")->required();
  census->add_option("--r", level, "Level r")->check(CLI::PositiveNumber);
  census->add_option("--k", k_text, "k range")->required();
  add_common(census, common);
  census->callback([&] {
    action = [&] {
      const auto fam = io::read_family(family_path);
      const auto ks = parse_range(k_text, "--k");
      const auto rep_c = iso_type_census(fam, census_degree, parse_integer(p_text), level, {ks.first, ks.last});
      Report rep;
      rep.references = {kRefCensus};
      rep.columns = {"type", "H", "count", "min(v_p(2k-chi), r)", "k"};
      for (std::size_t t = 0; t < rep_c.types.size(); ++t) {
        const auto& ty = rep_c.types[t];
        std::string classes, ks_text;
        for (auto c : ty.valuation_classes) classes += (classes.empty() ? "" : " ") + std::to_string(c);
        for (auto k : ty.ks) ks_text += (ks_text.empty() ? "" : " ") + std::to_string(k);
        rep.add_row({str(long(t + 1)), ty.group.to_string(), str(long(ty.ks.size())), classes, ks_text});
      }
      const std::size_t bound = level + 1;
      rep.checks.push_back({"at most r+1 types", rep_c.types.size() <= bound ? Status::pass : Status::fail,
                            std::to_string(rep_c.types.size()) + " <= " + std::to_string(bound)});
      bool determined = true;
      std::map<unsigned, std::size_t> owner;
      for (std::size_t t = 0; t < rep_c.types.size(); ++t)
        for (auto c : rep_c.types[t].valuation_classes)
          if (!owner.emplace(c, t).second) determined = false;
      rep.checks.push_back({"type determined by v_p(2k - chi)", determined ? Status::pass : Status::fail, ""});
      if (!rep_c.skipped.empty())
        rep.notes.push_back(std::to_string(rep_c.skipped.size()) + " values of k skipped (no data or above the stable range)");
      return rep;
    };
  });

  // browder
  std::string n_text = "2..6", bm_text = "1..5", bd_text = "0";
  auto* browder = app.add_subcommand("browder", "Vanishing of phi(P, P^m) in H_{n-1}(C_2(R^n); Z/d)");
  browder->add_option("--n", n_text, "Ambient dimension n or range");
  browder->add_option("--m", bm_text, "Power m or range");
  browder->add_option("--d", bd_text, "Modulus d (0 for Z) or range");
  add_common(browder, common);
  browder->callback([&] {
    action = [&] {
      const auto ns = parse_range(n_text, "--n");
      const auto ms = parse_range(bm_text, "--m");
      const auto ds = parse_range(bd_text, "--d");
      Report rep;
      rep.references = {kRefBrowder};
      rep.columns = {"n", "m", "d", "vanishes", "witness"};
      for (long n = ns.first; n <= ns.last; ++n)
        for (long m = ms.first; m <= ms.last; ++m)
          for (long d = ds.first; d <= ds.last; ++d) {
            if (d == 1) continue;
            if (m < 1) throw Error("--m: need m >= 1");
            const auto r = browder_vanishing(static_cast<int>(n), static_cast<unsigned>(m), d);
            rep.add_row({str(n), str(m), str(d), r.vanishes ? "yes" : "no", r.witness});
          }
      return rep;
    };
  });

  // transfer-check
  long ground = -1, tk = 0, tl = 0, max_ground = 4, max_l = 5;
  auto* dold = app.add_subcommand("transfer-check", "Exhaustive check of the Dold identity for transfer maps");
  dold->add_option("--ground", ground, "Ground set size (ordinary labels, m0 is extra); omit for a sweep");
  dold->add_option("--k", tk, "k");
  dold->add_option("--l", tl, "l");
  dold->add_option("--max-ground", max_ground, "Sweep: largest ground set");
  dold->add_option("--max-l", max_l, "Sweep: largest l");
  add_common(dold, common);
  dold->callback([&] {
    action = [&] {
      std::vector<DoldReport> reports;
      if (ground >= 0) {
        if (tk < 0 || tl < 0) throw Error("--k and --l must be non-negative");
        reports.push_back(verify_dold_identity(static_cast<std::size_t>(ground), static_cast<unsigned>(tk),
                                               static_cast<unsigned>(tl)));
      } else {
        if (max_ground < 0 || max_l < 2) throw Error("sweep needs --max-ground >= 0 and --max-l >= 2");
        reports = dold_sweep(static_cast<std::size_t>(max_ground), static_cast<unsigned>(max_l));
      }
      Report rep;
      rep.references = {kRefDold};
      rep.columns = {"ground", "k", "l", "configurations", "basis elements", "mismatches"};
      for (const auto& r : reports) {
        rep.add_row({str(long(r.ground_size)), str(long(r.k)), str(long(r.l)), str(long(r.configurations)),
                     str(long(r.basis_elements)), str(long(r.mismatches.size()))},
                    r.ok() ? Status::pass : Status::fail);
        for (const auto& mm : r.mismatches)
          rep.notes.push_back("mismatch at " + mm.configuration.to_string(r.ground_size) + ", basis " +
                              mm.basis.to_string(r.ground_size) + ": " + str(mm.lhs) + " vs " + str(mm.rhs));
      }
      return rep;
    };
  });

  // sphere-demo
  std::string demo_k = "2..50";
  long demo_m = 6;
  auto* demo = app.add_subcommand("sphere-demo", "Periodicity of H_1(C_k(S^2)) = Z/(2k-2) for every d | 2m");
  demo->add_option("--k", demo_k, "k range");
  demo->add_option("--max-m", demo_m, "Largest period m")->check(CLI::PositiveNumber);
  add_common(demo, common);
  demo->callback([&] {
    action = [&] {
      const auto ks = parse_range(demo_k, "--k");
      if (ks.first < 2) throw Error("--k: the sphere fixture starts at k = 2");
      const auto fam = sphere_family(ks.first, ks.last + demo_m);
      Report rep;
      rep.references = {kRefSphere, kRefPeriodicity};
      rep.columns = {"m", "d", "k", "compared", "pass", "fail", "skipped"};
      for (long m = 1; m <= demo_m; ++m)
        for (long d = 2; d <= 2 * m; ++d) {
          if ((2 * m) % d != 0) continue;
          const auto c = check_periodicity_even(fam, m, d, {ks.first, ks.last}, {1, 1});
          const auto pass = c.count(CheckStatus::pass), fail = c.count(CheckStatus::fail),
                     skipped = c.count(CheckStatus::skipped);
          rep.add_row({str(m), str(d), demo_k, str(long(c.entries.size())), str(long(pass)), str(long(fail)),
                       str(long(skipped))},
                      fail > 0 ? Status::fail : (skipped > 0 ? Status::skipped : Status::pass));
        }
      // Negative controls: d = 4 does not divide 2m = 2, and the groups do differ.
      try {
        check_periodicity_even(fam, 1, 4, {ks.first, ks.last}, {1, 1});
        rep.checks.push_back({"m = 1, d = 4 rejected", Status::fail, "accepted"});
      } catch (const Error& e) {
        rep.checks.push_back({"m = 1, d = 4 rejected", Status::pass, e.what()});
      }
      const auto a = tensor_tor_with_zq(sphere_h1(3), 4).tensor;
      const auto b = tensor_tor_with_zq(sphere_h1(4), 4).tensor;
      rep.checks.push_back({"k = 3 vs k = 4 mod 4 differ", a != b ? Status::pass : Status::fail,
                            a.to_string() + " vs " + b.to_string()});
      return rep;
    };
  });

  try {
    std::vector<std::string> argv_store{"cfhom"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    Report rep = action();
    rep.command = echo(args);
    render(rep, parse_format(common.format), out);
    return rep.ok() ? exit_ok : exit_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace cfhom::cli
