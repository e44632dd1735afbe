#include "qws/harmonic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace qws;
using qws::testing::max_diff_up_to_phase;
using qws::testing::random_clifford_circuit;
using qws::testing::scaled;

namespace {

ZdVector point(std::vector<i64> coords, i64 d) { return ZdVector(std::move(coords), d); }

GateCatalogEntry entry_of(GateKind k, const Dim& dim) { return catalog(GateSpec::single(k, 0), dim); }

}  // namespace

TEST(Catalog, FourierMap) {
    const Dim dim(7, 1);
    GateCatalogEntry f = entry_of(GateKind::F, dim);
    EXPECT_EQ(f.map.M, ZdMatrix(2, 2, {0, 1, -1, 0}, 7));
    EXPECT_EQ(f.action.alpha, ZdVector({0, 0}, 7));
    EXPECT_EQ(f.action.B, ZdMatrix::identity(2, 7));
    EXPECT_EQ(f.hbar_order, 0);
}

TEST(Catalog, PhaseShiftMap) {
    const Dim dim(7, 1);
    const i64 i2 = mod_half(7);
    GateCatalogEntry p = entry_of(GateKind::P, dim);
    EXPECT_EQ(p.map.M, ZdMatrix(2, 2, {1, 1, 0, 1}, 7));
    EXPECT_EQ(p.action.alpha, ZdVector({-i2, 0}, 7));
    EXPECT_EQ(p.action.B, ZdMatrix(2, 2, {0, 0, 0, i2}, 7));
    EXPECT_EQ(p.hbar_order, 0);
}

TEST(Catalog, TGateMap) {
    const Dim dim(7, 1);
    const i64 i2 = mod_half(7);
    const i64 i4 = mod_inv(4, 7);
    GateCatalogEntry t = entry_of(GateKind::T, dim);
    EXPECT_EQ(t.map.M, ZdMatrix(2, 2, {1, i2, 0, 1}, 7));
    EXPECT_EQ(t.action.alpha, ZdVector({-i4, 0}, 7));
    EXPECT_EQ(t.action.B, ZdMatrix(2, 2, {0, 0, 0, i4}, 7));
    EXPECT_EQ(t.hbar_order, 1);
}

TEST(Catalog, ControlledShiftMap) {
    const Dim dim(5, 2);
    const i64 i2 = mod_half(5);
    GateCatalogEntry c = catalog(GateSpec::cnot(0, 1), dim);
    // coordinates (p_0, p_1, q_0, q_1)
    ZdMatrix expect_m(4, 4, {1, -1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1}, 5);
    EXPECT_EQ(c.map.M, expect_m);
    EXPECT_EQ(c.action.alpha, ZdVector(4, 5));
    ZdMatrix expect_b(4, 4, 5);
    expect_b.set(1, 2, -i2);  // couples p_1 and q_0
    expect_b.set(2, 1, -i2);
    EXPECT_EQ(c.action.B, expect_b);
}

TEST(Catalog, TranslationGates) {
    const Dim dim(5, 1);
    GateCatalogEntry z = catalog(GateSpec::zpow(0, 3), dim);
    EXPECT_EQ(z.map.M, ZdMatrix::identity(2, 5));
    EXPECT_EQ(z.map.b, ZdVector({3, 0}, 5));
    EXPECT_EQ(z.action.alpha, ZdVector({3, 0}, 5));
    EXPECT_EQ(z.action.B, ZdMatrix(2, 2, 5));
    GateCatalogEntry x = catalog(GateSpec::xpow(0, 2), dim);
    EXPECT_EQ(x.map.b, ZdVector({0, 2}, 5));
}

TEST(Catalog, AllMapsSymplectic) {
    for (i64 d : {3, 5, 7, 15}) {
        const Dim dim1(d, 1);
        const ZdMatrix j1 = symplectic_form(1, d);
        for (GateKind k : {GateKind::F, GateKind::P, GateKind::T}) {
            EXPECT_TRUE(is_symplectic(entry_of(k, dim1).map.M, j1)) << "d=" << d;
        }
        const Dim dim2(d, 2);
        EXPECT_TRUE(is_symplectic(catalog(GateSpec::cnot(0, 1), dim2).map.M, symplectic_form(2, d)));
        EXPECT_TRUE(is_symplectic(catalog(GateSpec::cnot(1, 0), dim2).map.M, symplectic_form(2, d)));
    }
}

TEST(Cayley, CatalogValues) {
    const Dim dim(7, 1);
    EXPECT_EQ(cayley_B_from_M(entry_of(GateKind::F, dim).map.M), ZdMatrix::identity(2, 7));
    EXPECT_EQ(cayley_B_from_M(entry_of(GateKind::P, dim).map.M), ZdMatrix(2, 2, {0, 0, 0, mod_half(7)}, 7));
    EXPECT_EQ(cayley_B_from_M(ZdMatrix::identity(2, 7)), ZdMatrix(2, 2, 7));
}

TEST(Cayley, SingularWhenMinusOneEigenvalue) {
    // M = -I has (I + M) = 0
    EXPECT_THROW(cayley_B_from_M(ZdMatrix::identity(2, 5).neg()), CayleySingular);
}

TEST(Cayley, IdentityHoldsForComposedCliffordMaps) {
    std::mt19937_64 rng(47);
    const Dim dim(5, 2);
    const ZdMatrix eye = ZdMatrix::identity(4, 5);
    const ZdMatrix j = symplectic_form(2, 5);
    int checked = 0;
    while (checked < 25) {
        AffineSymplecticMap m = AffineSymplecticMap::identity(dim);
        for (const GateSpec& g : random_clifford_circuit(dim, 8, rng)) {
            m = compose_maps(catalog(g, dim).map, m);
        }
        i64 det = eye.add(m.M).det();
        if (std::gcd(det, 5LL) != 1) continue;
        ++checked;
        const ZdMatrix b = cayley_B_from_M(m.M);
        EXPECT_TRUE(b.is_symmetric());
        const ZdMatrix lhs = j.mul(b);
        const ZdMatrix rhs = mat_inv(eye.add(m.M)).mul(eye.sub(m.M));
        EXPECT_EQ(lhs, rhs);
        // the two factor orders agree
        EXPECT_EQ(lhs, eye.sub(m.M).mul(mat_inv(eye.add(m.M))));
    }
}

TEST(ActionEval, CatalogFormulas) {
    const Dim dim(3, 1);
    GateCatalogEntry f = entry_of(GateKind::F, dim);
    EXPECT_EQ(action_eval(f.action, point({1, 1}, 3)), 2);  // x_p^2 + x_q^2

    QuadraticAction zero{ZdMatrix(2, 2, 3), ZdVector(2, 3)};
    EXPECT_EQ(action_eval(zero, point({2, 1}, 3)), 0);

    const Dim dim5(5, 1);
    GateCatalogEntry p = entry_of(GateKind::P, dim5);
    EXPECT_EQ(action_eval(p.action, point({0, 1}, 5)), 0);  // inv2 (x_q^2 - x_q) at x_q = 1

    // closed forms over all points
    const i64 i2 = mod_half(5), i4 = mod_inv(4, 5);
    GateCatalogEntry t = entry_of(GateKind::T, dim5);
    for (i64 xp = 0; xp < 5; ++xp) {
        for (i64 xq = 0; xq < 5; ++xq) {
            const ZdVector x = point({xp, xq}, 5);
            EXPECT_EQ(action_eval(entry_of(GateKind::F, dim5).action, x), mod_reduce(xp * xp + xq * xq, 5));
            EXPECT_EQ(action_eval(p.action, x), mod_reduce(i2 * (xq * xq - xq), 5));
            EXPECT_EQ(action_eval(t.action, x), mod_reduce(i4 * (xq * xq - xq), 5));
        }
    }

    const Dim dim2(3, 2);
    GateCatalogEntry c = catalog(GateSpec::cnot(0, 1), dim2);
    for (i64 p2 = 0; p2 < 3; ++p2)
        for (i64 q1 = 0; q1 < 3; ++q1)
            EXPECT_EQ(action_eval(c.action, point({0, p2, q1, 0}, 3)), mod_reduce(-p2 * q1, 3));
}

TEST(CenterFunction, MatchesDenseGateCenterRepr) {
    for (i64 d : {3, 5, 7}) {
        const Dim dim(d, 1);
        const double dn = static_cast<double>(dim.hilbert_dim());
        for (GateKind k : {GateKind::F, GateKind::P, GateKind::T}) {
            GateCatalogEntry e = entry_of(k, dim);
            CenterTable from_action = center_function_from_action(e.action, dim);
            CenterTable from_dense = center_repr(build_gate(e.gate, dim));
            EXPECT_LT(max_diff_up_to_phase(scaled(from_dense.v, dn), from_action.v), 1e-10)
                << gate_kind_name(k) << " d=" << d;
        }
    }
    const Dim dim2(3, 2);
    GateCatalogEntry c = catalog(GateSpec::cnot(0, 1), dim2);
    CenterTable from_action = center_function_from_action(c.action, dim2);
    CenterTable from_dense = center_repr(build_gate(c.gate, dim2));
    EXPECT_LT(max_diff_up_to_phase(scaled(from_dense.v, 9.0), from_action.v), 1e-10);
}

TEST(CenterFunction, IdentityActionGivesAllOnes) {
    const Dim dim(5, 1);
    QuadraticAction zero{ZdMatrix(2, 2, 5), ZdVector(2, 5)};
    CenterTable tbl = center_function_from_action(zero, dim);
    for (const cx& v : tbl.v) EXPECT_NEAR(std::abs(v - cx{1.0, 0.0}), 0.0, 1e-14);
}

TEST(CenterFunction, UnitaryCenterModulusIsConstant) {
    for (GateKind k : {GateKind::F, GateKind::P, GateKind::C}) {
        const Dim dim(5, k == GateKind::C ? 2 : 1);
        const GateSpec g = (k == GateKind::C) ? GateSpec::cnot(0, 1) : GateSpec::single(k, 0);
        CenterTable tbl = center_repr(build_gate(g, dim));
        const double expect = 1.0 / static_cast<double>(dim.hilbert_dim());
        for (const cx& v : tbl.v) EXPECT_NEAR(std::abs(v), expect, 1e-10);
    }
}

TEST(DiscreteEom, PhaseShiftHamiltonian) {
    // H_P = -inv2 q^2 + inv2 q reproduces the P map including its shift.
    for (i64 d : {3, 7}) {
        const Dim dim(d, 1);
        const i64 i2 = mod_half(d);
        QuadraticHamiltonian h{ZdMatrix(2, 2, {0, 0, 0, -i2}, d), ZdVector({0, i2}, d)};
        AffineSymplecticMap m = discrete_eom(h, dim);
        GateCatalogEntry p = entry_of(GateKind::P, dim);
        EXPECT_EQ(m.M, p.map.M);
        EXPECT_EQ(m.b, p.map.b);
    }
}

TEST(DiscreteEom, BilinearCouplingGivesControlledShift) {
    // H = p_1 q_0 in coordinates (p_0, p_1, q_0, q_1): q_1 gains q_0 and
    // p_0 loses p_1, which is the catalog map of C(0, 1).
    const Dim dim(5, 2);
    const i64 i2 = mod_half(5);
    ZdMatrix h2(4, 4, 5);
    h2.set(1, 2, i2);
    h2.set(2, 1, i2);
    AffineSymplecticMap m = discrete_eom({h2, ZdVector(4, 5)}, dim);
    EXPECT_EQ(m.M, catalog(GateSpec::cnot(0, 1), dim).map.M);
    EXPECT_EQ(m.b, ZdVector(4, 5));
}

TEST(DiscreteEom, ZeroHamiltonianIsIdentity) {
    const Dim dim(5, 1);
    AffineSymplecticMap m = discrete_eom({ZdMatrix(2, 2, 5), ZdVector(2, 5)}, dim);
    EXPECT_EQ(m.M, ZdMatrix::identity(2, 5));
    EXPECT_EQ(m.b, ZdVector(2, 5));
}

TEST(DiscreteEom, NonSymplecticEulerStepRejected) {
    // the harmonic oscillator p^2 + q^2: a single Euler step is not exact
    const Dim dim(3, 1);
    QuadraticHamiltonian h{ZdMatrix::identity(2, 3), ZdVector(2, 3)};
    EXPECT_THROW(discrete_eom(h, dim), NonSymplecticResult);
}

TEST(ComposeMaps, Basics) {
    const Dim dim(5, 1);
    GateCatalogEntry f = entry_of(GateKind::F, dim);
    AffineSymplecticMap id = AffineSymplecticMap::identity(dim);
    EXPECT_EQ(compose_maps(id, f.map).M, f.map.M);
    EXPECT_EQ(compose_maps(id, f.map).b, f.map.b);

    AffineSymplecticMap f4 = f.map;
    for (int i = 0; i < 3; ++i) f4 = compose_maps(f.map, f4);
    EXPECT_EQ(f4.M, id.M);
    EXPECT_EQ(f4.b, id.b);

    AffineSymplecticMap z2 = catalog(GateSpec::zpow(0, 2), dim).map;
    AffineSymplecticMap z3 = catalog(GateSpec::zpow(0, 3), dim).map;
    EXPECT_EQ(compose_maps(z2, z3).b, ZdVector({0, 0}, 5));  // chords add mod d
}

TEST(ComposeMaps, InverseUndoes) {
    const Dim dim(7, 1);
    GateCatalogEntry p = entry_of(GateKind::P, dim);
    AffineSymplecticMap round = compose_maps(p.map.inverse(), p.map);
    EXPECT_EQ(round.M, ZdMatrix::identity(2, 7));
    EXPECT_EQ(round.b, ZdVector(2, 7));
}

TEST(Prefactor, SpecValues) {
    const Dim dim(3, 1);
    EXPECT_NEAR(propagator_prefactor(ZdMatrix::identity(2, 3), dim), std::sqrt(8.0 * 4.0), 1e-12);
    EXPECT_NEAR(propagator_prefactor(entry_of(GateKind::F, dim).map.M, dim), 4.0, 1e-12);  // |2^3 * 2|^{1/2}
    EXPECT_NEAR(propagator_prefactor(entry_of(GateKind::P, dim).map.M, dim), std::sqrt(32.0), 1e-12);
    EXPECT_THROW(propagator_prefactor(ZdMatrix::identity(2, 3).neg(), dim), CayleySingular);
}

TEST(PositionAction, FourierIsProductForm) {
    const Dim dim(5, 1);
    PositionAction g = position_action(entry_of(GateKind::F, dim).action, dim);
    EXPECT_FALSE(g.constrained);
    for (i64 qp = 0; qp < 5; ++qp)
        for (i64 q = 0; q < 5; ++q)
            EXPECT_EQ(g.eval(point({qp}, 5), point({q}, 5)), mod_reduce(qp * q, 5));
}

TEST(PositionAction, PhaseShiftIsDiagonalShear) {
    const Dim dim(5, 1);
    const i64 i2 = mod_half(5);
    PositionAction g = position_action(entry_of(GateKind::P, dim).action, dim);
    ASSERT_TRUE(g.constrained);
    for (i64 q = 0; q < 5; ++q) {
        EXPECT_EQ(g.supported_qprime(point({q}, 5)), point({q}, 5));
        EXPECT_EQ(g.eval(point({q}, 5), point({q}, 5)), mod_reduce(i2 * (q * q - q), 5));
    }
}

TEST(PositionAction, ControlledShiftVanishes) {
    const Dim dim(3, 2);
    PositionAction g = position_action(catalog(GateSpec::cnot(0, 1), dim).action, dim);
    ASSERT_TRUE(g.constrained);
    for (i64 q0 = 0; q0 < 3; ++q0) {
        for (i64 q1 = 0; q1 < 3; ++q1) {
            const ZdVector q = point({q0, q1}, 3);
            const ZdVector qp = g.supported_qprime(q);
            EXPECT_EQ(qp, point({q0, mod_reduce(q0 + q1, 3)}, 3));
            EXPECT_EQ(g.eval(qp, q), 0);
        }
    }
}

TEST(PositionAction, SingularStationarySystemRejected) {
    // B_pp nonzero but singular: no unique stationary momentum
    const Dim dim(3, 2);
    ZdMatrix b(4, 4, 3);
    b.set(0, 0, 1);  // p_0^2 only
    QuadraticAction a{b, ZdVector(4, 3)};
    EXPECT_THROW(position_action(a, dim), LegendreSingular);
}

TEST(PositionAction, MatchesDensePropagatorPhases) {
    // arg <q'|U|q> = G(q', q) up to a global phase, d = 5
    const Dim dim(5, 1);
    const Omega w(5);

    DenseOperator f = build_gate(GateSpec::single(GateKind::F, 0), dim);
    PositionAction gf = position_action(entry_of(GateKind::F, dim).action, dim);
    std::vector<cx> dense_entries, predicted;
    for (i64 qp = 0; qp < 5; ++qp) {
        for (i64 q = 0; q < 5; ++q) {
            dense_entries.push_back(f.at(qp, q));
            predicted.push_back(w.pow(gf.eval(point({qp}, 5), point({q}, 5))) / std::sqrt(5.0));
        }
    }
    EXPECT_LT(max_diff_up_to_phase(dense_entries, predicted), 1e-12);

    DenseOperator p = build_gate(GateSpec::single(GateKind::P, 0), dim);
    PositionAction gp = position_action(entry_of(GateKind::P, dim).action, dim);
    dense_entries.clear();
    predicted.clear();
    for (i64 q = 0; q < 5; ++q) {
        dense_entries.push_back(p.at(q, q));
        predicted.push_back(w.pow(gp.eval(point({q}, 5), point({q}, 5))));
    }
    EXPECT_LT(max_diff_up_to_phase(dense_entries, predicted), 1e-12);
}

TEST(Alpha, RoundTripsThroughB) {
    // b = (M + I) alpha / 2 recovers alpha for every catalog entry
    const Dim dim(7, 1);
    for (GateKind k : {GateKind::F, GateKind::P, GateKind::T}) {
        GateCatalogEntry e = entry_of(k, dim);
        const ZdVector alpha = e.map.alpha();
        const ZdMatrix m_plus_i = e.map.M.add(ZdMatrix::identity(2, 7));
        EXPECT_EQ(m_plus_i.mul(alpha).scale(mod_half(7)), e.map.b);
        EXPECT_EQ(alpha, e.action.alpha);
    }
}
