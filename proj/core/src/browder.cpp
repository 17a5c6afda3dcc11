#include <utility>

#include "cfhom/error.hpp"
#include "cfhom/stability.hpp"

namespace cfhom {

namespace {

BrowderExpression times_point(const BrowderExpression& e) {
  BrowderExpression out;
  for (const auto& [mono, c] : e) out[{mono.point_power + 1, mono.bracket_count}] += c;
  return out;
}

void accumulate(BrowderExpression& into, const BrowderExpression& e) {
  for (const auto& [mono, c] : e) {
    into[mono] += c;
    if (into[mono] == 0) into.erase(mono);
  }
}

}  // namespace

BrowderExpression expand_bracket_with_power(unsigned m) {
  if (m < 1) throw Error("invalid power m = 0 (need m >= 1)");
  // phi(P, P^1) = phi(P, P); phi(P, P^j) = phi(P, P^{j-1}) P + P^{j-1} phi(P, P).
  BrowderExpression e{{{0, 1}, Integer(1)}};
  for (unsigned j = 2; j <= m; ++j) {
    BrowderExpression next = times_point(e);
    accumulate(next, BrowderExpression{{{j - 1, 1}, Integer(1)}});
    e = std::move(next);
  }
  return e;
}

BrowderResult browder_vanishing(int n, unsigned m, const Integer& d) {
  if (n < 2) throw Error("invalid ambient dimension n = " + std::to_string(n) + " (need n >= 2)");
  if (d < 0 || d == 1) throw Error("invalid modulus d = " + to_string(d) + " (need d = 0 or d >= 2)");
  const BrowderExpression e = expand_bracket_with_power(m);
  if (e.size() != 1 || e.begin()->first.bracket_count != 1 || e.begin()->first.point_power != m - 1)
    throw Error("internal error: unexpected expansion of phi(P, P^m)");

  BrowderResult res;
  // phi(P, P) is twice a generator of H_{n-1}(RP^{n-1}).
  res.coefficient = 2 * e.begin()->second;
  const ChainComplex rp = projective_space_complex(n - 1);
  res.top_homology = integral_homology(rp).at(n - 1);
  const std::string bracket = "phi(P,P^" + std::to_string(m) + ") = " + to_string(e.begin()->second) +
                              " P^" + std::to_string(m - 1) + " phi(P,P)";
  if (res.top_homology.is_trivial()) {
    res.vanishes = true;
    res.witness = bracket + "; H_" + std::to_string(n - 1) + "(RP^" + std::to_string(n - 1) + "; Z) = 0";
    return res;
  }
  const std::string where = "H_" + std::to_string(n - 1) + "(RP^" + std::to_string(n - 1) + "; " +
                            (d == 0 ? std::string("Z") : "Z/" + to_string(d)) + ")";
  if (d == 0) {
    res.vanishes = res.coefficient == 0;
    res.witness = bracket + " = " + to_string(res.coefficient) + " g in " + where + " = Z";
    return res;
  }
  const Integer reduced = mod_floor(res.coefficient, d);
  res.vanishes = reduced == 0;
  res.witness = bracket + " = " + to_string(res.coefficient) + " g = " + to_string(reduced) + " g in " + where +
                " = " + mod_q_homology(rp, d).at(n - 1).to_string();
  return res;
}

}  // namespace cfhom
