// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include "tropbundle/bundle.hpp"

#include "support/cli_cases.hpp"
#include "support/generators.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace tb = tropbundle;
namespace tt = tropbundle::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

tb::Bundle line_bundle(const tb::Curve& curve, long slope, const tb::Rational& value_at_0) {
  return tb::Bundle::single_transition(curve, {tb::Permutation::identity(1), {tb::AffineFn{tb::Rational(slope), value_at_0}}});
}

tb::Bundle cyclic_bundle(const tb::Curve& curve, std::size_t r, long d, const tb::Rational& offset) {
  tb::AffineMonomial m{tb::standard_cycle(r), std::vector<tb::AffineFn>(r)};
  m.rows[0] = {tb::Rational(-d), offset};
  return tb::Bundle::single_transition(curve, m);
}

Outcome ac1_invertibility() {
  Outcome out;
  const tb::TropValue values[] = {tb::TropValue::neg_infinity(), tb::TropValue(0L), tb::TropValue(1L)};
  for (int code = 0; code < 19683; ++code) {
    tb::TropMatrix m(3, 3);
    int rest = code;
    for (std::size_t k = 0; k < 9; ++k, rest /= 3) m(k / 3, k % 3) = values[rest % 3];
    out.expect(tb::tmat_is_invertible(m) == tt::oracle_has_two_sided_inverse(m), m.str());
  }
  return out;
}

Outcome ac2_slope_degree() {
  Outcome out;
  for (const tb::Rational& length : {tb::Rational(1), tb::Rational(3), tb::Rational(5, 2)}) {
    for (int s = 3; s <= 5; ++s) {
      const tb::Curve curve(length, s);
      for (long d = -3; d <= 3; ++d) {
        const tb::Bundle f = line_bundle(curve, -d, tb::Rational(0));
        const std::string tag = "d=" + std::to_string(d) + " L=" + tb::to_string(length) + " s=" + std::to_string(s);
        out.expect(tb::degree(f) == d, "degree " + tag);
        out.expect(tb::divisor_degree(tb::chern1(f, tb::canonical_section(f))) == d, "chern1 " + tag);
      }
    }
  }
  return out;
}

Outcome ac3_classification(tt::Rng& rng) {
  Outcome out;
  const tb::Curve curve(tb::Rational(1), 3);
  const std::pair<int, long> types[] = {{1, 1}, {2, 2}, {2, 4}, {3, 3}, {2, 1}, {3, 2}};
  const tb::Rational offsets[] = {tb::Rational(0), tb::Rational(1, 2), tb::Rational(1),
                                  tb::Rational(3, 2), tb::Rational(2), tb::Rational(3)};
  for (const auto& [r, d] : types) {
    for (const auto& c : offsets) {
      for (const auto& c2 : offsets) {
        const tb::Bundle f = cyclic_bundle(curve, r, d, c);
        const tb::Bundle g = cyclic_bundle(curve, r, d, c2);
        const bool expected = tt::oracle_solvable(c - c2, r, d);
        const std::string tag = "r=" + std::to_string(r) + " d=" + std::to_string(d) + " c=" + tb::to_string(c) +
                                " c'=" + tb::to_string(c2);
        out.expect(tb::is_isomorphic(f, g) == expected, tag);
        // The same verdict for a disguised copy of g.
        const tb::Bundle disguised = tb::apply_gauge(g, tt::random_gauge(rng, curve, r));
        out.expect(tb::is_isomorphic(f, disguised) == expected, tag + " (gauged)");
      }
    }
  }
  return out;
}

Outcome ac4_gauge_invariance(tt::Rng& rng) {
  Outcome out;
  for (int i = 0; i < 200; ++i) {
    const tb::Bundle f = tt::random_bundle(rng, 4, 6);
    const auto classes = tb::classify(f);
    out.expect(tb::is_isomorphic(f, tb::normalize(f)), "normalize, bundle " + std::to_string(i));
    for (int g = 0; g < 5; ++g) {
      const tb::Bundle h = tb::apply_gauge(f, tt::random_gauge(rng, f.curve(), f.rank()));
      out.expect(tb::classify(h) == classes, "gauge " + std::to_string(g) + ", bundle " + std::to_string(i));
    }
  }
  return out;
}

Outcome ac5_additivity(tt::Rng& rng) {
  Outcome out;
  for (int i = 0; i < 100; ++i) {
    const tb::Curve curve = tt::random_curve(rng);
    const tb::Bundle f = tt::random_bundle(rng, curve, tt::uniform_int(rng, 1, 3));
    const tb::Bundle g = tt::random_bundle(rng, curve, tt::uniform_int(rng, 1, 3));
    const tb::Bundle sum = tb::direct_sum(f, g);
    out.expect(tb::degree(sum) == tb::degree(f) + tb::degree(g), "pair " + std::to_string(i));
    for (const tb::Bundle* b : {&f, &g, &sum}) {
      for (int k = -3; k < 0; ++k) out.expect(tb::chern_k_degree(*b, k) == 0, "k=" + std::to_string(k));
      for (int k = b->rank() + 1; k <= b->rank() + 3; ++k) {
        out.expect(tb::chern_k_degree(*b, k) == 0, "k=" + std::to_string(k));
      }
    }
  }
  return out;
}

Outcome ac6_bounded_sections(tt::Rng& rng) {
  Outcome out;
  for (int i = 0; i < 50; ++i) {
    const tb::Bundle f = tt::random_bundle(rng, tt::random_curve(rng), 1);
    const tb::Section s = tb::canonical_section(f);
    const tb::Divisor base = tb::chern1(f, s);
    for (int p = 0; p < 5; ++p) {
      const tb::CircleFn h = tt::random_global_fn(rng, f.curve().length());
      const tb::Section t = s.plus(h, f.curve());
      const std::string tag = "bundle " + std::to_string(i) + " perturbation " + std::to_string(p);
      out.expect(tb::is_section_of(f, t), tag + " compatible");
      const tb::Divisor moved = tb::chern1(f, t);
      out.expect(tb::divisor_degree(moved) == tb::divisor_degree(base), tag + " degree");
      out.expect(moved - base == tb::pl_divisor(h), tag + " difference");
    }
  }
  return out;
}

Outcome ac7_pull_back(tt::Rng& rng) {
  Outcome out;
  for (int i = 0; i < 50; ++i) {
    const tb::Bundle f = tt::random_bundle(rng, 4, 6);
    for (int m = 1; m <= 3; ++m) {
      out.expect(tb::degree(tb::pull_back_cover(f, m)) == m * tb::degree(f),
                 "bundle " + std::to_string(i) + " m=" + std::to_string(m));
    }
  }
  return out;
}

Outcome ac8_cli(const std::string& exe, const std::string& fixtures, const std::string& golden) {
  Outcome out;
  const auto scratch = std::filesystem::temp_directory_path() / "tropbundle_acceptance";
  std::filesystem::create_directories(scratch);
  for (const auto& c : tt::cli_cases()) {
    const auto problems = tt::check_cli_case(c, exe, fixtures, golden, scratch);
    out.expect(problems.empty(), c.name + (problems.empty() ? "" : ": " + problems.front()));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : TROPBUNDLE_EXE;
  const std::string fixtures = argc > 2 ? argv[2] : TROPBUNDLE_FIXTURES;
  const std::string golden = argc > 3 ? argv[3] : TROPBUNDLE_GOLDEN;
  tt::Rng rng(20261019);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 G(r) equals the invertible tropical matrices (3x3 over {-inf,0,1})", ac1_invertibility},
      {"AC2 line bundle with transition slope -d has degree d", ac2_slope_degree},
      {"AC3 classification agrees with the Diophantine oracle", [&] { return ac3_classification(rng); }},
      {"AC4 classify is gauge invariant and normalize preserves the class", [&] { return ac4_gauge_invariance(rng); }},
      {"AC5 degree is additive and chern_k vanishes outside 0..r", [&] { return ac5_additivity(rng); }},
      {"AC6 bounded sections differ by the divisor of a global function", [&] { return ac6_bounded_sections(rng); }},
      {"AC7 pull-back along an m-fold cover multiplies degree by m", [&] { return ac7_pull_back(rng); }},
      {"AC8 CLI golden files and pullback round trip", [&] { return ac8_cli(exe, fixtures, golden); }},
  };

  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << label << " (" << o.checks << " checks)";
    if (!o.pass) std::cout << "; first failure: " << o.first_failure;
    std::cout << '\n';
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
