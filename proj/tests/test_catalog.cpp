// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "alphaineq/catalog.hpp"
#include "alphaineq/harness.hpp"
#include "oracle.hpp"

using namespace alphaineq;

namespace {

const Dimension kOne(1.0);
const Dimension kHalf(0.5);

bool approx(double v, double expected, double rel = 1e-12) {
    return std::abs(v - expected) <= rel * std::max({std::abs(v), std::abs(expected), 1.0});
}

double gap_scale(const Verdict& a, const Verdict& b) {
    return std::max({a.scale, b.scale, 1.0});
}

} // namespace

TEST_CASE("conjugate pair construction and regimes") {
    const ConjugatePair h = ConjugatePair::from_p(2.0);
    CHECK(h.q == 2.0);
    CHECK(h.regime == Regime::holder);

    const ConjugatePair r = ConjugatePair::from_p(0.5);
    CHECK(r.q == -1.0);
    CHECK(r.regime == Regime::reverse);

    CHECK_THROWS_AS(ConjugatePair::from_p(1.0), RegimeError);
    CHECK_THROWS_AS(ConjugatePair::from_p(-2.0), RegimeError);
    CHECK_THROWS_AS(ConjugatePair::from_pq(2.0, 3.0), RegimeError);
    CHECK(ConjugatePair::from_pq(2.0, 2.0).q == 2.0);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double p = i % 2 == 0 ? 1.0 + 1e-3 + 9.0 * u(rng)
                                    : std::clamp(u(rng), 1e-3, 1.0 - 1e-3);
        const ConjugatePair pair = ConjugatePair::from_p(p);
        REQUIRE(std::abs(1.0 / pair.p + 1.0 / pair.q - 1.0) <= 1e-12);
    }
}

TEST_CASE("exponent tuple construction") {
    const ExponentTuple h = ExponentTuple::from_exponents({3.0, 3.0, 3.0});
    CHECK(h.regime == Regime::holder);

    const ExponentTuple r = ExponentTuple::from_exponents({0.5, -2.0});
    CHECK(r.regime == Regime::reverse);

    CHECK_THROWS_AS(ExponentTuple::from_exponents({2.0, 3.0}), RegimeError);  // sum != 1
    CHECK_THROWS_AS(ExponentTuple::from_exponents({4.0}), ShapeError);
    CHECK_THROWS_AS(ExponentTuple::from_exponents({-0.5, 0.6, 0.1}), RegimeError);
}

TEST_CASE("verdict status classification") {
    TolerancePolicy tol;
    Verdict v = make_verdict(1.0, 2.0, Direction::le, tol);
    CHECK(v.gap == 1.0);
    CHECK(v.status == Status::holds);

    v = make_verdict(2.0, 1.0, Direction::le, tol);
    CHECK(v.gap == -1.0);
    CHECK(v.status == Status::violation);

    v = make_verdict(2.0, 1.0, Direction::ge, tol);
    CHECK(v.status == Status::holds);

    v = make_verdict(1.0, 1.0 + 5e-9, Direction::le, tol);
    CHECK(v.status == Status::equality);  // |gap| below tol_eq * scale

    // equality takes precedence over the hold threshold in the overlap band
    v = make_verdict(1.0 + 5e-9, 1.0, Direction::le, tol);
    CHECK(v.status == Status::equality);

    v = make_verdict(1.0 + 5e-8, 1.0, Direction::le, tol);
    CHECK(v.status == Status::violation);

    TolerancePolicy bad;
    bad.abs_floor = 0.5;
    CHECK_THROWS_AS(make_verdict(1.0, 1.0, Direction::le, bad), DomainError);
}

TEST_CASE("bernoulli evaluator") {
    // y = 1 forces both sides to zero
    Verdict v = eval_bernoulli({1.0, 0.5}, Dimension(0.8));
    CHECK(v.lhs == 0.0);
    CHECK(v.rhs == 0.0);
    CHECK(v.status == Status::equality);

    // frozen: lhs = 4^(0.25) - 1, rhs = 0.5 * 3^(0.5)
    v = eval_bernoulli({4.0, 0.5}, kHalf);
    CHECK(approx(v.lhs, 0.41421356237309503));
    CHECK(approx(v.rhs, 0.8660254037844386));
    CHECK(v.direction == Direction::le);
    CHECK(v.status == Status::holds);

    // frozen: the printed (2.1) fails below y = 1 under value semantics
    v = eval_bernoulli({0.25, 0.5}, kHalf);
    CHECK(approx(v.lhs, -0.2928932188134525));
    CHECK(approx(v.rhs, -0.4330127018922193));
    CHECK(v.status == Status::violation);

    // the m > 1 direction also fails near y = 1 for alpha < 1 (documented)
    v = eval_bernoulli({4.0, 2.0}, kHalf);
    CHECK(approx(v.lhs, 3.0));
    CHECK(approx(v.rhs, 3.4641016151377544));
    CHECK(v.direction == Direction::ge);
    CHECK(v.status == Status::violation);
    CHECK(eval_bernoulli({9.0, 2.0}, kHalf).status == Status::holds);

    // degenerate exponents are evaluated as pure equality checks
    CHECK(eval_bernoulli({4.0, 0.0}, kHalf).status == Status::equality);
    CHECK(eval_bernoulli({4.0, 1.0}, kHalf).status == Status::violation);
    CHECK(eval_bernoulli({1.0, 1.0}, kHalf).status == Status::equality);

    CHECK_THROWS_AS(eval_bernoulli({0.0, 0.5}, kHalf), DomainError);
    CHECK_THROWS_AS(eval_bernoulli({-1.0, 0.5}, kHalf), DomainError);
    CHECK_THROWS_AS(eval_bernoulli({2.0, -1.0}, kHalf), RegimeError);
    CHECK_THROWS_AS(eval_bernoulli({2e6, 0.5}, kHalf), RangeError);
}

TEST_CASE("young evaluator") {
    const ConjugatePair p2 = ConjugatePair::from_p(2.0);

    Verdict v = eval_young({1.0, 1.0}, p2, Dimension(0.37));
    CHECK(v.status == Status::equality);  // a^p = b^q = 1

    v = eval_young({2.0, 1.0}, p2, kHalf);
    CHECK(approx(v.lhs, 1.4142135623730951));
    CHECK(approx(v.rhs, 1.5));
    CHECK(v.status == Status::holds);

    const ConjugatePair rev = ConjugatePair::from_p(0.5);
    v = eval_young({2.0, 1.0}, rev, kOne);
    CHECK(approx(v.lhs, 2.0));
    CHECK(approx(v.rhs, 1.82842712474619));
    CHECK(v.direction == Direction::ge);
    CHECK(v.status == Status::holds);

    CHECK_THROWS_AS(eval_young({2.0, 0.0}, rev, kOne), PoleError);
    CHECK_THROWS_AS(eval_young({-1.0, 1.0}, p2, kOne), DomainError);
    CHECK_THROWS_AS(eval_young({2e6, 1.0}, p2, kOne), RangeError);
}

TEST_CASE("nary young evaluator") {
    const ExponentTuple t3 = ExponentTuple::from_exponents({3.0, 3.0, 3.0});

    Verdict v = eval_nary_young({{0.7, 0.7, 0.7}}, t3, kOne);
    CHECK(v.status == Status::equality);  // all a_j^{p_j} equal

    v = eval_nary_young({{1.0, 2.0, 3.0}}, t3, kOne);
    CHECK(approx(v.lhs, 6.0));
    CHECK(approx(v.rhs, 12.0));
    CHECK(v.status == Status::holds);

    CHECK_THROWS_AS(eval_nary_young({{1.0, 2.0}}, t3, kOne), ShapeError);
    const ExponentTuple rev = ExponentTuple::from_exponents({0.5, -2.0});
    CHECK_THROWS_AS(eval_nary_young({{1.0, 0.0}}, rev, kOne), PoleError);

    // n = 2 reduces to eval_young
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 3000; ++i) {
        const double p = i % 2 == 0 ? 1.001 + 6.0 * u(rng)
                                    : std::clamp(u(rng), 1e-2, 1.0 - 1e-2);
        const ConjugatePair pair = ConjugatePair::from_p(p);
        const double a = std::exp(-3.0 + 6.0 * u(rng));
        const double b = std::exp(-3.0 + 6.0 * u(rng));
        const Dimension d(0.001 + 0.999 * u(rng));
        const Verdict vy = eval_young({a, b}, pair, d);
        const Verdict vn = eval_nary_young(
            {{a, b}}, ExponentTuple::from_exponents({pair.p, pair.q}), d);
        REQUIRE(std::abs(vy.gap - vn.gap) <= 1e-12 * gap_scale(vy, vn));
    }
}

TEST_CASE("holder evaluator") {
    const ConjugatePair p2 = ConjugatePair::from_p(2.0);

    Verdict v = eval_holder({{3.0}, {5.0}}, p2, Dimension(0.42));
    CHECK(v.status == Status::equality);  // single-term factorization

    v = eval_holder({{1.0, 2.0}, {1.0, 1.0}}, p2, kOne);
    CHECK(approx(v.lhs, 3.0));
    CHECK(approx(v.rhs, 3.1622776601683795));
    CHECK(v.status == Status::holds);

    const ConjugatePair rev = ConjugatePair::from_p(0.5);
    v = eval_holder({{1.0, 2.0}, {1.0, 1.0}}, rev, kOne);
    CHECK(approx(v.lhs, 3.0));
    CHECK(approx(v.rhs, 2.914213562373095));
    CHECK(v.direction == Direction::ge);
    CHECK(v.status == Status::holds);

    CHECK_THROWS_AS(eval_holder({{1.0, 2.0}, {1.0, 0.0}}, rev, kOne), PoleError);
    CHECK_THROWS_AS(eval_holder({{1.0}, {1.0, 2.0}}, p2, kOne), ShapeError);
    CHECK_THROWS_AS(eval_holder({{}, {}}, p2, kOne), ShapeError);

    // extreme reverse q: the y-norm underflows the direct power sum; the
    // log-domain fallback must keep the verdict sound instead of inf/0
    const ConjugatePair extreme = ConjugatePair::from_p(0.999);
    v = eval_holder({{1.0, 2.0}, {900.0, 950.0}}, extreme, kOne);
    CHECK(std::isfinite(v.rhs));
    CHECK(v.status == Status::holds);
}

TEST_CASE("minkowski evaluator") {
    Verdict v = eval_minkowski({{1.0, 2.0}, {3.0, 1.0}}, 2.0, kOne,
                               FormVariant::normalized);
    CHECK(approx(v.lhs, 5.0));
    CHECK(approx(v.rhs, 5.398345637668169));
    CHECK(v.status == Status::holds);

    v = eval_minkowski({{1.0, 2.0}, {3.0, 1.0}}, 0.5, kOne, FormVariant::normalized);
    CHECK(approx(v.lhs, 13.928203230275509));
    CHECK(approx(v.rhs, 13.292528739883945));
    CHECK(v.direction == Direction::ge);
    CHECK(v.status == Status::holds);

    // proportional sequences are the stated equality case
    v = eval_minkowski({{1.0, 2.0, 0.5}, {3.0, 6.0, 1.5}}, 3.0, Dimension(0.6),
                       FormVariant::normalized);
    CHECK(v.status == Status::equality);

    // the printed (3.2) q-exponent form fails when the y-norm dominates
    v = eval_minkowski({{0.0, 0.0}, {1.0, 1.0}}, 1.5, kOne, FormVariant::as_written);
    CHECK(approx(v.lhs, 1.5874010519681994));  // 2^(2/3)
    CHECK(approx(v.rhs, 1.2599210498948732));  // 2^(1/3)
    CHECK(v.status == Status::violation);
    CHECK(eval_minkowski({{0.0, 0.0}, {1.0, 1.0}}, 1.5, kOne,
                         FormVariant::normalized)
              .status == Status::equality);

    CHECK_THROWS_AS(eval_minkowski({{1.0}, {1.0}}, 1.0, kOne, FormVariant::normalized),
                    RegimeError);
    CHECK_THROWS_AS(eval_minkowski({{1.0}, {1.0}}, -1.0, kOne, FormVariant::normalized),
                    RegimeError);
}

TEST_CASE("holder_multi evaluator") {
    const ExponentTuple t22 = ExponentTuple::from_exponents({2.0, 2.0});

    Verdict v = eval_holder_multi({2, 2, {1.0, 1.0, 2.0, 1.0}}, t22, kOne);
    CHECK(approx(v.lhs, 3.0));
    CHECK(approx(v.rhs, 3.1622776601683795));
    CHECK(v.status == Status::holds);

    CHECK(eval_holder_multi({1, 2, {2.0, 5.0}}, t22, kOne).status == Status::equality);

    CHECK_THROWS_AS(eval_holder_multi({2, 3, {1, 1, 1, 1, 1, 1}}, t22, kOne),
                    ShapeError);
    const ExponentTuple rev = ExponentTuple::from_exponents({0.5, -2.0});
    CHECK_THROWS_AS(eval_holder_multi({2, 2, {1.0, 0.0, 2.0, 1.0}}, rev, kOne),
                    PoleError);

    // m = 2 reduces to eval_holder
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double p = 1.001 + 6.0 * u(rng);
        const ConjugatePair pair = ConjugatePair::from_p(p);
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 6.0);
        PairedInstance paired;
        MultiInstance multi{n, 2, {}};
        for (std::size_t k = 0; k < n; ++k) {
            paired.x.push_back(std::exp(-3.0 + 6.0 * u(rng)));
            paired.y.push_back(std::exp(-3.0 + 6.0 * u(rng)));
            multi.data.push_back(paired.x.back());
            multi.data.push_back(paired.y.back());
        }
        const Dimension d(0.001 + 0.999 * u(rng));
        const Verdict vh = eval_holder(paired, pair, d);
        const Verdict vm = eval_holder_multi(
            multi, ExponentTuple::from_exponents({pair.p, pair.q}), d);
        REQUIRE(std::abs(vh.gap - vm.gap) <= 1e-12 * gap_scale(vh, vm));
    }
}

TEST_CASE("minkowski_multi evaluator") {
    // single sequence: both sides coincide
    CHECK(eval_minkowski_multi({3, 1, {1.0, 2.0, 3.0}}, 2.0, kOne,
                               FormVariant::normalized)
              .status == Status::equality);

    // printed (3.10) fails already at n = 1, m = 2
    Verdict v = eval_minkowski_multi({1, 2, {1.0, 1.0}}, 2.0, kOne,
                                     FormVariant::as_written);
    CHECK(approx(v.lhs, 2.0));
    CHECK(approx(v.rhs, 1.4142135623730951));
    CHECK(v.status == Status::violation);

    v = eval_minkowski_multi({1, 2, {1.0, 1.0}}, 2.0, kOne, FormVariant::normalized);
    CHECK(approx(v.rhs, 2.0));
    CHECK(v.status == Status::equality);

    // m = 2 normalized reduces to eval_minkowski
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double p = i % 2 == 0 ? 1.001 + 6.0 * u(rng)
                                    : std::clamp(u(rng), 1e-2, 1.0 - 1e-2);
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 6.0);
        PairedInstance paired;
        MultiInstance multi{n, 2, {}};
        for (std::size_t k = 0; k < n; ++k) {
            paired.x.push_back(std::exp(-3.0 + 6.0 * u(rng)));
            paired.y.push_back(std::exp(-3.0 + 6.0 * u(rng)));
            multi.data.push_back(paired.x.back());
            multi.data.push_back(paired.y.back());
        }
        const Dimension d(0.001 + 0.999 * u(rng));
        const Verdict va = eval_minkowski(paired, p, d, FormVariant::normalized);
        const Verdict vb = eval_minkowski_multi(multi, p, d, FormVariant::normalized);
        REQUIRE(std::abs(va.gap - vb.gap) <= 1e-12 * gap_scale(va, vb));
    }
}

TEST_CASE("radon evaluator") {
    Verdict v = eval_radon({{1.0, 2.0}, {1.0, 1.0}, 0.5}, 2.0, kOne);
    CHECK(approx(v.lhs, 2.574929997872566));
    CHECK(approx(v.rhs, 2.6247861659576377));
    CHECK(v.status == Status::holds);

    v = eval_radon({{1.0}, {1.0}, 0.5}, 2.0, kOne);
    CHECK(approx(v.lhs, 2.0));
    CHECK(approx(v.rhs, 2.0));
    CHECK(v.status == Status::equality);

    // proportional pairs saturate
    v = eval_radon({{1.0, 2.0, 0.25}, {3.0, 6.0, 0.75}, 0.3}, 1.7, Dimension(0.8));
    CHECK(v.status == Status::equality);

    CHECK_THROWS_AS(eval_radon({{0.0, 0.0}, {1.0, 1.0}, 0.5}, 2.0, kOne), PoleError);
    CHECK_THROWS_AS(eval_radon({{1.0}, {1.0}, 1.5}, 2.0, kOne), RegimeError);
    CHECK_THROWS_AS(eval_radon({{1.0}, {1.0}, 0.5}, 0.9, kOne), RegimeError);
}

TEST_CASE("radon_multi evaluator") {
    CHECK(eval_radon_multi({3, 1, {1.0, 2.0, 3.0}}, 2.0, 0.5, kOne,
                           FormVariant::normalized)
              .status == Status::equality);

    // m = 2 normalized matches eval_radon on the two columns
    Verdict v = eval_radon_multi({2, 2, {1.0, 1.0, 2.0, 1.0}}, 2.0, 0.5, kOne,
                                 FormVariant::normalized);
    CHECK(approx(v.lhs, 2.574929997872566));
    CHECK(approx(v.rhs, 2.6247861659576377));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double p = 1.001 + 6.0 * u(rng);
        const double r = std::clamp(u(rng), 1e-2, 1.0 - 1e-2);
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 6.0);
        RadonInstance rad{{}, {}, r};
        MultiInstance multi{n, 2, {}};
        for (std::size_t k = 0; k < n; ++k) {
            rad.x.push_back(std::exp(-3.0 + 6.0 * u(rng)));
            rad.y.push_back(std::exp(-3.0 + 6.0 * u(rng)));
            multi.data.push_back(rad.x.back());
            multi.data.push_back(rad.y.back());
        }
        const Dimension d(0.001 + 0.999 * u(rng));
        const Verdict va = eval_radon(rad, p, d);
        const Verdict vb = eval_radon_multi(multi, p, r, d, FormVariant::normalized);
        REQUIRE(std::abs(va.gap - vb.gap) <= 1e-12 * gap_scale(va, vb));
    }

    CHECK_THROWS_AS(eval_radon_multi({1, 2, {0.0, 0.0}}, 2.0, 0.5, kOne,
                                     FormVariant::normalized),
                    PoleError);
}

TEST_CASE("classical_reduce transforms magnitudes and drops alpha to 1") {
    const InstanceSpec young{YoungInstance{4.0, 9.0}, kHalf};
    const InstanceSpec reduced = classical_reduce(young);
    const auto& ry = std::get<YoungInstance>(reduced.payload);
    CHECK(ry.a == 2.0);
    CHECK(ry.b == 3.0);
    CHECK(reduced.dim.alpha() == 1.0);

    const InstanceSpec paired{PairedInstance{{1.0, 4.0}, {9.0, 16.0}}, kHalf};
    const auto& rp = std::get<PairedInstance>(classical_reduce(paired).payload);
    CHECK(rp.x == std::vector<double>{1.0, 2.0});
    CHECK(rp.y == std::vector<double>{3.0, 4.0});

    // alpha = 1 instances reduce to themselves exactly
    const InstanceSpec id{PairedInstance{{0.123, 7.7}, {2.5, 0.0}}, kOne};
    const auto& rid = std::get<PairedInstance>(classical_reduce(id).payload);
    CHECK(rid.x == std::vector<double>{0.123, 7.7});
    CHECK(rid.y == std::vector<double>{2.5, 0.0});
}

TEST_CASE("reduction invariance: gap(alpha) equals gap(reduced, 1)") {
    // spot check per evaluator here; the full 1e4-instance sweep runs in the
    // acceptance suite
    std::mt19937_64 seeds(8);
    for (InequalityId id :
         {InequalityId::young, InequalityId::nary_young, InequalityId::holder,
          InequalityId::minkowski, InequalityId::holder_multi,
          InequalityId::minkowski_multi, InequalityId::radon,
          InequalityId::radon_multi}) {
        for (Regime regime : {Regime::holder, Regime::reverse}) {
            const bool ratio_form =
                id == InequalityId::radon || id == InequalityId::radon_multi;
            if (ratio_form && regime == Regime::reverse) continue;
            SuiteConfig cfg;
            cfg.id = id;
            cfg.regime = regime;
            cfg.seed = seeds();
            for (std::size_t t = 0; t < 500; ++t) {
                TrialRng rng(trial_key(cfg.seed, t));
                const TrialInstance ti = sample_instance(cfg, rng);
                const Verdict orig = evaluate(id, ti.spec, ti.params,
                                              FormVariant::normalized, cfg.tol);
                const Verdict red = evaluate(id, classical_reduce(ti.spec), ti.params,
                                             FormVariant::normalized, cfg.tol);
                if (!std::isfinite(orig.gap) || !std::isfinite(red.gap)) continue;
                REQUIRE(std::abs(orig.gap - red.gap) <= 1e-9 * gap_scale(orig, red));
            }
        }
    }
}

TEST_CASE("bernoulli has no gap-preserving classical reduction") {
    // the right side powers y - 1 rather than y, so reducing y -> y^alpha
    // changes the gap; this documents why bernoulli is excluded from the
    // reduction-invariance suite
    const BernoulliInstance inst{4.0, 0.5};
    const Verdict orig = eval_bernoulli(inst, kHalf);
    const InstanceSpec reduced = classical_reduce({inst, kHalf});
    const Verdict red =
        eval_bernoulli(std::get<BernoulliInstance>(reduced.payload), kOne);
    CHECK(approx(orig.lhs, red.lhs));  // the left side does reduce
    CHECK(std::abs(orig.gap - red.gap) > 0.3);
}

TEST_CASE("proof-internal cross-checks") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    // weighted two-term mean bound behind the Young proof:
    // a^(alpha m) b^(alpha(1-m)) <= m a^alpha + (1-m) b^alpha
    for (int i = 0; i < 5000; ++i) {
        const double a = std::exp(-6.9 + 13.8 * u(rng));
        const double b = std::exp(-6.9 + 13.8 * u(rng));
        const double m = std::clamp(u(rng), 1e-3, 1.0 - 1e-3);
        const double al = 0.001 + 0.999 * u(rng);
        const double lhs = std::pow(a, al * m) * std::pow(b, al * (1.0 - m));
        const double rhs = m * std::pow(a, al) + (1.0 - m) * std::pow(b, al);
        REQUIRE(lhs <= rhs + 1e-9 * std::max({lhs, rhs, 1.0}));
    }

    // r-power bound used by the Radon proof:
    // ((sum x^(alpha r))^(1/r) + (sum y^(alpha r))^(1/r))^r <= sum (x^alpha + y^alpha)^r
    for (int i = 0; i < 5000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 6.0);
        const double r = std::clamp(u(rng), 5e-2, 1.0 - 5e-2);
        const double al = 0.001 + 0.999 * u(rng);
        double sx = 0.0, sy = 0.0, spair = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double x = std::exp(-3.0 + 6.0 * u(rng));
            const double y = std::exp(-3.0 + 6.0 * u(rng));
            sx += std::pow(x, al * r);
            sy += std::pow(y, al * r);
            spair += std::pow(std::pow(x, al) + std::pow(y, al), r);
        }
        const double lhs = std::pow(std::pow(sx, 1.0 / r) + std::pow(sy, 1.0 / r), r);
        REQUIRE(lhs <= spair + 1e-9 * std::max({lhs, spair, 1.0}));
    }
}

TEST_CASE("evaluate dispatcher validates payload and params") {
    const InstanceSpec young{YoungInstance{1.0, 2.0}, kOne};
    EvalParams params;
    CHECK_THROWS_AS(evaluate(InequalityId::young, young, params,
                             FormVariant::normalized, {}),
                    UsageError);  // pair missing
    params.pair = ConjugatePair::from_p(2.0);
    CHECK_THROWS_AS(evaluate(InequalityId::holder, young, params,
                             FormVariant::normalized, {}),
                    UsageError);  // payload mismatch
    CHECK(evaluate(InequalityId::young, young, params, FormVariant::normalized, {})
              .status == Status::holds);
}

TEST_CASE("evaluators match the long double oracle") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double al = 0.001 + 0.999 * u(rng);
        const double p = 1.001 + 6.0 * u(rng);
        const ConjugatePair pair = ConjugatePair::from_p(p);
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 6.0);
        std::vector<double> x(n), y(n);
        for (std::size_t k = 0; k < n; ++k) {
            x[k] = std::exp(-6.9 + 13.8 * u(rng));
            y[k] = std::exp(-6.9 + 13.8 * u(rng));
        }

        const Verdict vh = eval_holder({x, y}, pair, Dimension(al));
        const oracle::Sides oh = oracle::holder(x, y, pair.p, pair.q, al);
        REQUIRE(approx(vh.lhs, static_cast<double>(oh.lhs), 1e-11));
        REQUIRE(approx(vh.rhs, static_cast<double>(oh.rhs), 1e-11));

        const Verdict vm = eval_minkowski({x, y}, p, Dimension(al),
                                          FormVariant::as_written);
        const oracle::Sides om = oracle::minkowski(x, y, p, al, true);
        REQUIRE(approx(vm.lhs, static_cast<double>(om.lhs), 1e-11));
        REQUIRE(approx(vm.rhs, static_cast<double>(om.rhs), 1e-11));

        const double r = std::clamp(u(rng), 5e-2, 1.0 - 5e-2);
        const Verdict vr = eval_radon({x, y, r}, p, Dimension(al));
        const oracle::Sides orad = oracle::radon(x, y, p, r, al);
        REQUIRE(approx(vr.lhs, static_cast<double>(orad.lhs), 1e-11));
        REQUIRE(approx(vr.rhs, static_cast<double>(orad.rhs), 1e-11));
    }
}
