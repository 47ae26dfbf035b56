#include "tropsi/verify.hpp"

#include <algorithm>
#include <sstream>

#include "tropsi/divisors.hpp"
#include "tropsi/fan.hpp"
#include "tropsi/parallel.hpp"
#include "tropsi/partitions.hpp"
#include "tropsi/psi.hpp"
#include "tropsi/trees.hpp"
#include "tropsi/weights.hpp"

namespace tropsi::verify {

namespace {

std::vector<WeightVector> weight_families(int n) {
  std::vector<WeightVector> out;
  for (int m = 0; m <= n - 2; ++m) out.emplace_back(n, m);
  return out;
}

void gen_exponents(int slot, int n, int remaining, int cap, std::vector<std::int64_t>& current,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (slot == n) {
    out.push_back(current);
    return;
  }
  const int limit = std::min(remaining, cap);
  for (int v = 0; v <= limit; ++v) {
    current[slot] = v;
    gen_exponents(slot + 1, n, remaining - v, cap, current, out);
  }
  current[slot] = 0;
}

/// All exponent vectors of length n with entries <= cap and total <= max_total.
std::vector<std::vector<std::int64_t>> exponent_vectors(int n, int max_total, int cap) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current(n, 0);
  gen_exponents(0, n, max_total, cap, current, out);
  return out;
}

std::string exponents_to_string(const std::vector<std::int64_t>& k) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  os << ')';
  return os.str();
}

std::string describe_cycle(const Cycle& z) {
  if (z.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, weight] : z.entries) {
    if (!first) os << ", ";
    os << weight << "*[" << t.to_string() << "]";
    first = false;
  }
  return os.str();
}

void record_failure(CheckResult& check, const std::string& detail) {
  if (check.pass) {
    check.pass = false;
    check.detail = detail;
  }
}

CheckResult check_vanishing_sum(int max_n) {
  CheckResult check{"sum of v_S over V_{N,w} vanishes in R_w", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      for (int N = 1; N <= n; ++N) {
        Vector sum = space.zero();
        for (const Split& s : V_set(N, w)) sum += space.ray_vector(s);
        ++check.cases;
        if (!sum.is_zero()) {
          record_failure(check, "n=" + std::to_string(n) + " w=" + w.to_string() +
                                    " N=" + std::to_string(N));
        }
      }
    }
  }
  return check;
}

CheckResult check_v_spans(int max_n) {
  CheckResult check{"V_{N,w} spans R_w", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      for (int N = 1; N <= n; ++N) {
        linalg::Matrix rows;
        for (const Split& s : V_set(N, w)) rows.push_back(space.ray_vector(s).coords());
        ++check.cases;
        if (linalg::rank(rows) != space.quotient_dim()) {
          record_failure(check, "n=" + std::to_string(n) + " w=" + w.to_string() +
                                    " N=" + std::to_string(N));
        }
      }
    }
  }
  return check;
}

CheckResult check_simplicial(int max_n) {
  CheckResult check{"cone rays are linearly independent", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      for (int codim = 0; codim <= n - 3; ++codim) {
        for (const CombinatorialType& t : enumerate_types(w, codim)) {
          linalg::Matrix rows;
          for (const Split& s : t.splits()) rows.push_back(space.ray_vector(s).coords());
          ++check.cases;
          if (linalg::rank(rows) != t.edge_count()) {
            record_failure(check, "w=" + w.to_string() + " type " + t.to_string());
          }
        }
      }
    }
  }
  return check;
}

CheckResult check_fan_balancing(int max_n) {
  CheckResult check{"M_{0,w}^trop with unit weights is balanced", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      ++check.cases;
      const BalanceReport report = check_balancing(full_fan(w), space);
      if (!report.balanced) {
        record_failure(check, "w=" + w.to_string() + ": " + report.detail);
      }
    }
  }
  return check;
}

CheckResult check_psi_balancing(int max_n) {
  CheckResult check{"every psi_{N,w} is balanced", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      for (int N = 1; N <= n; ++N) {
        ++check.cases;
        const BalanceReport report = check_balancing(psi_class(N, w), space);
        if (!report.balanced) {
          record_failure(check, "w=" + w.to_string() + " N=" + std::to_string(N) + ": " +
                                    report.detail);
        }
      }
    }
  }
  return check;
}

CheckResult check_product_balancing(int max_n) {
  CheckResult check{"every intersection product is balanced", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      const auto exponents = exponent_vectors(n, n - 3, 3);
      std::vector<std::string> failures(exponents.size());
      parallel_for(exponents.size(), [&](std::size_t i) {
        const PsiProductQuery q(w, PsiExponents(exponents[i]));
        const BalanceReport report = check_balancing(intersect_product(q), space);
        if (!report.balanced) {
          failures[i] = "w=" + w.to_string() + " K=" + exponents_to_string(exponents[i]) + ": " +
                        report.detail;
        }
      });
      check.cases += static_cast<long long>(exponents.size());
      for (const std::string& f : failures) {
        if (!f.empty()) record_failure(check, f);
      }
    }
  }
  return check;
}

CheckResult check_divisor_realization(int max_n) {
  CheckResult check{"div(f_{N,w}) = K(N,w) psi_{N,w}", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      const Cycle fan = full_fan(w);
      for (int N = 1; N <= n; ++N) {
        ++check.cases;
        const Cycle divisor = weil_divisor(f_N_w(N, w), fan, space);
        const Cycle expected = psi_class(N, w).scaled(K_constant(N, w));
        if (!(divisor == expected)) {
          record_failure(check, "n=" + std::to_string(n) + " w=" + w.to_string() + " N=" +
                                    std::to_string(N) + ": div=" + describe_cycle(divisor) +
                                    " expected=" + describe_cycle(expected));
        }
      }
    }
  }
  return check;
}

CheckResult check_boundary_agreement(int max_n) {
  CheckResult check{"boundary divisor rule matches div(phi_I)", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    const WeightVector classical(n, 0);
    const AmbientSpace space(classical);
    const Cycle fan = full_fan(classical);
    for (const Split& I : valid_splits(classical)) {
      ++check.cases;
      const Cycle rule = boundary_divisor(I, n);
      const Cycle divisor = weil_divisor(phi_I(I, n), fan, space);
      if (!(rule == divisor)) {
        record_failure(check, "n=" + std::to_string(n) + " I=" + I.to_string());
      }
    }
  }
  return check;
}

CheckResult check_divisors_balanced(int max_n) {
  CheckResult check{"Weil divisors of f_{N,w} and phi_I are balanced", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      const Cycle fan = full_fan(w);
      for (int N = 1; N <= n; ++N) {
        ++check.cases;
        const BalanceReport report = check_balancing(weil_divisor(f_N_w(N, w), fan, space), space);
        if (!report.balanced) {
          record_failure(check, "div(f) w=" + w.to_string() + " N=" + std::to_string(N));
        }
      }
    }
    const WeightVector classical(n, 0);
    const AmbientSpace space(classical);
    const Cycle fan = full_fan(classical);
    for (const Split& I : valid_splits(classical)) {
      ++check.cases;
      const BalanceReport report = check_balancing(weil_divisor(phi_I(I, n), fan, space), space);
      if (!report.balanced) {
        record_failure(check, "div(phi) n=" + std::to_string(n) + " I=" + I.to_string());
      }
    }
  }
  return check;
}

CheckResult check_k_counts(int max_n) {
  CheckResult check{"K(N,w) counts the valid 2-splits avoiding N", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      for (int N = 1; N <= n; ++N) {
        ++check.cases;
        if (K_constant(N, w) != static_cast<std::int64_t>(V_set(N, w).size())) {
          record_failure(check, "w=" + w.to_string() + " N=" + std::to_string(N));
        }
      }
    }
  }
  return check;
}

CheckResult check_positive_representations(int max_n) {
  CheckResult check{"positive representations exist, are unique, and match the side rule", true,
                    0, ""};
  for (int n = 4; n <= std::min(max_n, 5); ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const AmbientSpace space(w);
      for (const Split& I : valid_splits(w)) {
        for (int N = 1; N <= n; ++N) {
          ++check.cases;
          try {
            const std::map<Split, Rat> rep = positive_representation(I, N, w, space);
            // Reconciliation with the min-formula route: the coefficients are
            // the indicator of the valid 2-subsets of the N-free side.
            const MarkSet side =
                contains_mark(I.side(), N) ? I.complement(n) : I.side();
            for (const Split& s : V_set(N, w)) {
              const MarkSet two = s.pair_avoiding(N, n);
              const bool inside = (two & side) == two;
              const auto it = rep.find(s);
              const Rat coeff = it == rep.end() ? Rat(0) : it->second;
              if (coeff != Rat(inside ? 1 : 0)) {
                record_failure(check, "I=" + I.to_string() + " N=" + std::to_string(N) + " w=" +
                                          w.to_string() + ": coefficient of " + s.to_string());
              }
            }
          } catch (const std::exception& e) {
            record_failure(check, "I=" + I.to_string() + " N=" + std::to_string(N) + " w=" +
                                      w.to_string() + ": " + e.what());
          }
        }
      }
    }
  }
  return check;
}

CheckResult check_min_formula_binary(int max_n) {
  CheckResult check{"M_tau is 0 or 1 and marks exactly the psi-class faces", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const Cycle fan = full_fan(w);
      for (int N = 1; N <= n; ++N) {
        const Cycle step = intersect_step(fan, N);
        const Cycle psi = psi_class(N, w);
        ++check.cases;
        for (const auto& [t, weight] : step.entries) {
          if (weight != 1) {
            record_failure(check, "w=" + w.to_string() + " N=" + std::to_string(N) + " tau=" +
                                      t.to_string() + " M=" + weight.str());
          }
        }
        if (!(step == psi)) {
          record_failure(check, "w=" + w.to_string() + " N=" + std::to_string(N) +
                                    ": min-formula support differs from psi");
        }
      }
    }
  }
  return check;
}

struct OracleOutcome {
  std::string mismatch;
  std::string negative;
  std::string valence;
  std::string order;
  std::string monotone;
};

void run_oracle_query(const WeightVector& w, const std::vector<std::int64_t>& k,
                      OracleOutcome& out) {
  const PsiProductQuery q(w, PsiExponents(k));
  const Cycle closed = intersect_product(q);
  const Cycle oracle = intersect_recursive(q);
  const std::string tag = "w=" + w.to_string() + " K=" + exponents_to_string(k);
  if (!(closed == oracle)) {
    out.mismatch = tag + ": product=" + describe_cycle(closed) + " oracle=" +
                   describe_cycle(oracle);
    return;
  }
  for (const auto& [t, weight] : closed.entries) {
    if (weight < 0) out.negative = tag + ": weight " + weight.str() + " on " + t.to_string();
    for (const VertexLocalData& v : t.vertex_data()) {
      if (v.degree() != 3 + q.exponents.total_over(v.marks)) {
        out.valence = tag + ": valence equation fails on " + t.to_string();
      }
    }
  }
  // Order independence: intersect factors in every distinct order (there are
  // at most 3 factors in the sweep).
  std::vector<int> factors;
  for (int mark = 1; mark <= w.n(); ++mark) {
    for (std::int64_t i = 0; i < q.exponents.at(mark); ++i) factors.push_back(mark);
  }
  if (factors.size() >= 2) {
    std::vector<int> perm = factors;
    do {
      if (!(intersect_recursive_ordered(q, perm) == oracle)) {
        out.order = tag + ": order dependence detected";
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // Monotone support: each cone of the product is a single contraction of a
  // cone of the product with one factor removed.
  if (!factors.empty() && !closed.empty()) {
    std::vector<std::int64_t> reduced = k;
    --reduced[factors.back() - 1];
    const Cycle parent = intersect_product(PsiProductQuery(w, PsiExponents(reduced)));
    for (const auto& [t, weight] : closed.entries) {
      bool found = false;
      for (const auto& [p, pw] : parent.entries) {
        for (const Split& s : p.splits()) {
          if (contract_edge(p, s) == t) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) out.monotone = tag + ": cone " + t.to_string() + " not a face of the parent";
    }
  }
}

Report oracle_checks(int max_n) {
  CheckResult equal{"closed form equals the recursive oracle", true, 0, ""};
  CheckResult nonneg{"intersection weights are nonnegative", true, 0, ""};
  CheckResult valence{"valence equation holds on every output cone", true, 0, ""};
  CheckResult order{"oracle is order independent", true, 0, ""};
  CheckResult monotone{"support shrinks into the codim-1 skeleton per factor", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      const auto exponents = exponent_vectors(n, n - 3, 3);
      std::vector<OracleOutcome> outcomes(exponents.size());
      parallel_for(exponents.size(),
                   [&](std::size_t i) { run_oracle_query(w, exponents[i], outcomes[i]); });
      equal.cases += static_cast<long long>(exponents.size());
      nonneg.cases += static_cast<long long>(exponents.size());
      valence.cases += static_cast<long long>(exponents.size());
      order.cases += static_cast<long long>(exponents.size());
      monotone.cases += static_cast<long long>(exponents.size());
      for (const OracleOutcome& o : outcomes) {
        if (!o.mismatch.empty()) record_failure(equal, o.mismatch);
        if (!o.negative.empty()) record_failure(nonneg, o.negative);
        if (!o.valence.empty()) record_failure(valence, o.valence);
        if (!o.order.empty()) record_failure(order, o.order);
        if (!o.monotone.empty()) record_failure(monotone, o.monotone);
      }
    }
  }
  return {equal, nonneg, valence, order, monotone};
}

CheckResult check_psi_equivalence(int max_n) {
  CheckResult check{"psi characterisation equals the pushforward definition", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      for (int N = 1; N <= n; ++N) {
        ++check.cases;
        const Cycle direct = psi_class(N, w);
        const Cycle pushed = psi_class_pushforward(N, w);
        if (!(direct == pushed)) {
          record_failure(check, "w=" + w.to_string() + " N=" + std::to_string(N) + ": direct=" +
                                    describe_cycle(direct) + " pushed=" + describe_cycle(pushed));
        }
      }
    }
  }
  return check;
}

Report kerber_markwig_checks(const std::vector<int>& ns) {
  CheckResult weights{"all-ones weights are products of multinomials", true, 0, ""};
  CheckResult degrees{"all-ones top degrees equal (n-3)!/prod k_i!", true, 0, ""};
  for (int n : ns) {
    const WeightVector w(n, 0);
    for (const auto& k : exponent_vectors(n, n - 3, 3)) {
      const PsiProductQuery q(w, PsiExponents(k));
      const Cycle closed = intersect_product(q);
      ++weights.cases;
      for (const auto& [t, weight] : closed.entries) {
        BigInt expected = 1;
        for (const VertexLocalData& v : t.vertex_data()) {
          std::vector<std::int64_t> local;
          for (int mark : marks_of(v.marks)) local.push_back(q.exponents.at(mark));
          expected *= multinomial(q.exponents.total_over(v.marks), local);
        }
        if (weight != expected) {
          record_failure(weights, "n=" + std::to_string(n) + " K=" + exponents_to_string(k) +
                                      " cone " + t.to_string());
        }
      }
      if (q.codim() == n - 3) {
        ++degrees.cases;
        BigInt expected = 1;
        for (std::int64_t i = 2; i <= n - 3; ++i) expected *= i;
        for (std::int64_t ki : k) {
          for (std::int64_t i = 2; i <= ki; ++i) expected /= i;
        }
        if (degree(q) != expected) {
          record_failure(degrees, "n=" + std::to_string(n) + " K=" + exponents_to_string(k));
        }
      }
    }
  }
  return {weights, degrees};
}

CheckResult check_top_degree(int max_n) {
  CheckResult check{"degree matches the unique-cone weight of both routes", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      for (const auto& k : exponent_vectors(n, n - 3, n - 3)) {
        std::int64_t total = 0;
        for (std::int64_t v : k) total += v;
        if (total != n - 3) continue;
        ++check.cases;
        const PsiProductQuery q(w, PsiExponents(k));
        const BigInt closed_form = degree(q);
        const Cycle product = intersect_product(q);
        const Cycle oracle = intersect_recursive(q);
        const auto star_weight = [&](const Cycle& z) -> BigInt {
          if (z.empty()) return 0;
          return z.entries.begin()->second;
        };
        const bool shape_ok =
            product.entries.size() <= 1 && oracle.entries.size() <= 1 &&
            (product.empty() || product.entries.begin()->first.edge_count() == 0);
        if (!shape_ok || closed_form != star_weight(product) ||
            closed_form != star_weight(oracle)) {
          record_failure(check, "w=" + w.to_string() + " K=" + exponents_to_string(k) +
                                    ": degree=" + closed_form.str() + " product=" +
                                    describe_cycle(product) + " oracle=" + describe_cycle(oracle));
        }
      }
    }
  }
  return check;
}

CheckResult check_degree_spots() {
  CheckResult check{"top-degree spot values", true, 0, ""};
  const auto expect = [&](int n, int m, std::vector<std::int64_t> k, const BigInt& value) {
    ++check.cases;
    const PsiProductQuery q(WeightVector(n, m), PsiExponents(std::move(k)));
    if (degree(q) != value) {
      record_failure(check, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                ": got " + degree(q).str());
    }
  };
  expect(4, 0, {1, 0, 0, 0}, 1);
  expect(5, 3, {2, 0, 0, 0, 0}, 1);
  expect(5, 3, {1, 1, 0, 0, 0}, 2);
  return check;
}

CheckResult check_worked_examples() {
  CheckResult check{"worked examples: psi_{4,w}, psi_{1,w}, and D_{45}", true, 0, ""};
  const int n = 5;
  const WeightVector w(5, 2);
  const auto ray = [&](MarkSet side) { return CombinatorialType(n, {Split::from_side(side, n)}); };
  const MarkSet m15 = mark_bit(1) | mark_bit(5);
  const MarkSet m25 = mark_bit(2) | mark_bit(5);
  const MarkSet m35 = mark_bit(3) | mark_bit(5);
  {
    ++check.cases;
    Cycle expected(w, 1);
    expected.add(ray(m15), 1);
    expected.add(ray(m25), 1);
    expected.add(ray(m35), 1);
    if (!(psi_class(4, w) == expected)) {
      record_failure(check, "psi_{4,w}: " + describe_cycle(psi_class(4, w)));
    }
  }
  {
    ++check.cases;
    Cycle expected(w, 1);
    for (int i = 2; i <= 4; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        if (i == 4 && j == 5) continue;  // {4,5} is not w-stable
        expected.add(ray(mark_bit(i) | mark_bit(j)), 1);
      }
    }
    if (!(psi_class(1, w) == expected)) {
      record_failure(check, "psi_{1,w}: " + describe_cycle(psi_class(1, w)));
    }
  }
  {
    ++check.cases;
    const WeightVector classical(5, 0);
    Cycle expected(classical, 1);
    expected.add(ray(mark_bit(3) | mark_bit(4) | mark_bit(5)), 1);  // v_{12}
    expected.add(ray(mark_bit(2) | mark_bit(4) | mark_bit(5)), 1);  // v_{13}
    expected.add(ray(mark_bit(2) | mark_bit(3)), 1);                // v_{23}
    expected.add(ray(mark_bit(4) | mark_bit(5)), -1);               // v_{45}
    const Cycle d45 = boundary_divisor(Split::from_side(mark_bit(4) | mark_bit(5), n), n);
    if (!(d45 == expected)) record_failure(check, "D_45: " + describe_cycle(d45));
  }
  return check;
}

Report appendix_sweeps(int max_n) {
  CheckResult a1{"tlm(S, K, w) is nonnegative for every S and K", true, 0, ""};
  CheckResult a2{"tlm <= tlm restricted to partitions separating t2 and N", true, 0, ""};
  for (int n = 4; n <= max_n; ++n) {
    for (const WeightVector& w : weight_families(n)) {
      for (MarkSet S = 1; S <= w.full_set(); ++S) {
        const std::vector<int> members = marks_of(S);
        // Exponent choices on the marks of S; zero elsewhere.
        std::vector<std::vector<std::int64_t>> local =
            exponent_vectors(static_cast<int>(members.size()), 3 * members.size(), 3);
        for (const auto& localk : local) {
          std::vector<std::int64_t> k(n, 0);
          for (std::size_t i = 0; i < members.size(); ++i) k[members[i] - 1] = localk[i];
          const PsiExponents K(k);
          const BigInt value = tlm(S, K, w);
          ++a1.cases;
          if (value < 0) {
            record_failure(a1, "n=" + std::to_string(n) + " w=" + w.to_string() + " S=" +
                                   mark_set_to_string(S) + " K=" + exponents_to_string(k) +
                                   ": tlm=" + value.str());
          }
          for (int t2 : members) {
            for (int N : members) {
              if (t2 == N) continue;
              // The inequality needs a heavy mark in S besides t2 and N.
              bool has_heavy_partner = false;
              for (int t1 : members) {
                if (t1 != t2 && t1 != N && w.is_heavy(t1)) has_heavy_partner = true;
              }
              if (!has_heavy_partner) continue;
              ++a2.cases;
              const BigInt restricted = tlm_restricted(S, K, w, t2, N);
              if (value > restricted) {
                record_failure(a2, "n=" + std::to_string(n) + " w=" + w.to_string() + " S=" +
                                       mark_set_to_string(S) + " K=" + exponents_to_string(k) +
                                       " t2=" + std::to_string(t2) + " N=" + std::to_string(N) +
                                       ": tlm=" + value.str() + " restricted=" + restricted.str());
              }
            }
          }
        }
      }
    }
  }
  return {a1, a2};
}

}  // namespace

bool all_pass(const Report& report) {
  for (const CheckResult& check : report) {
    if (!check.pass) return false;
  }
  return true;
}

Report fan_suite(int max_n) {
  return {check_vanishing_sum(max_n), check_v_spans(max_n),      check_simplicial(max_n),
          check_fan_balancing(max_n), check_psi_balancing(max_n), check_product_balancing(max_n)};
}

Report divisor_suite(int max_n) {
  return {check_divisor_realization(max_n), check_boundary_agreement(max_n),
          check_divisors_balanced(max_n),   check_k_counts(max_n),
          check_positive_representations(max_n), check_min_formula_binary(max_n)};
}

namespace {

std::vector<int> kerber_markwig_range(int max_n) {
  std::vector<int> ns{5};
  if (max_n >= 6) ns.push_back(6);
  return ns;
}

}  // namespace

Report psi_suite(int max_n) {
  Report report = oracle_checks(max_n);
  report.push_back(check_psi_equivalence(max_n));
  for (CheckResult& check : kerber_markwig_checks(kerber_markwig_range(max_n))) {
    report.push_back(std::move(check));
  }
  report.push_back(check_top_degree(max_n));
  report.push_back(check_degree_spots());
  return report;
}

Report appendix_suite(int max_n) {
  Report report = appendix_sweeps(max_n);
  report.push_back(check_min_formula_binary(max_n));
  return report;
}

namespace {

CheckResult merge(const std::string& name, const Report& parts) {
  CheckResult merged{name, true, 0, ""};
  for (const CheckResult& part : parts) {
    merged.cases += part.cases;
    if (!part.pass && merged.pass) {
      merged.pass = false;
      merged.detail = part.name + ": " + part.detail;
    }
  }
  return merged;
}

}  // namespace

Report acceptance(int max_n) {
  Report report;
  {
    CheckResult c = check_worked_examples();
    c.name = "criterion 1: worked-example fidelity (psi_{4,w}, psi_{1,w}, D_45)";
    report.push_back(std::move(c));
  }
  {
    CheckResult c = check_divisor_realization(max_n);
    c.name = "criterion 2: divisor realization div(f_{N,w}) = K(N,w) psi_{N,w}";
    report.push_back(std::move(c));
  }
  {
    const Report oracle = oracle_checks(max_n);
    CheckResult c = merge("criterion 3: oracle equivalence of both intersection routes",
                          {oracle[0], oracle[3]});
    report.push_back(std::move(c));
  }
  {
    CheckResult c = merge("criterion 4: Kerber-Markwig specialization for all-ones weights",
                          kerber_markwig_checks(kerber_markwig_range(max_n)));
    report.push_back(std::move(c));
  }
  {
    CheckResult c = merge("criterion 5: top-degree closed form",
                          {check_top_degree(max_n), check_degree_spots()});
    report.push_back(std::move(c));
  }
  {
    CheckResult c = merge("criterion 6: balancing of fans, psi-classes, and products",
                          {check_fan_balancing(max_n), check_psi_balancing(max_n),
                           check_product_balancing(max_n)});
    report.push_back(std::move(c));
  }
  {
    Report parts = appendix_sweeps(max_n);
    parts.push_back(check_min_formula_binary(max_n));
    CheckResult c = merge("criterion 7: appendix property suite", parts);
    report.push_back(std::move(c));
  }
  {
    CheckResult c = check_psi_equivalence(max_n);
    c.name = "criterion 8: definition equivalence of psi classes";
    report.push_back(std::move(c));
  }
  return report;
}

}  // namespace tropsi::verify
