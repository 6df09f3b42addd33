#include <catch2/catch_amalgamated.hpp>

#include <orbitforge/classify.hpp>

#include "oracles.hpp"

using namespace orbitforge;

TEST_CASE("bracket") {
    const LieElement sx = LieElement::pauli(1, 1, 0, "sx");
    const LieElement sy = LieElement::pauli(1, 1, 1, "sy");
    SECTION("[sx, sy] = 2 sz") {
        const LieElement b = bracket(sx, sy);
        REQUIRE(b.terms.size() == 1);
        REQUIRE(b.terms[0].axis == 2);
        REQUIRE(b.terms[0].coeff == 2.0);
        // dense oracle: -i(AB - BA)
        const Eigen::MatrixXcd a = sx.matrix(), bb = sy.matrix();
        const Eigen::MatrixXcd want = cd{0, -1} * (a * bb - bb * a);
        REQUIRE((b.matrix() - want).cwiseAbs().maxCoeff() < 1e-14);
    }
    SECTION("[A, A] = 0") { REQUIRE(bracket(sx, sx).is_zero()); }
    SECTION("disjoint sites commute") {
        REQUIRE(bracket(LieElement::pauli(2, 1, 0, ""), LieElement::pauli(2, 2, 1, ""))
                    .is_zero());
    }
    SECTION("brackets of combinations match the dense oracle") {
        const LieElement a{2, "a",
                           {PauliTerm{1, 0, 0.7}, PauliTerm{2, 2, -0.3}, PauliTerm{0, 0, 0.5}}};
        const LieElement b{2, "b", {PauliTerm{1, 1, 1.2}, PauliTerm{2, 0, 0.4}}};
        const Eigen::MatrixXcd want =
            cd{0, -1} * (a.matrix() * b.matrix() - b.matrix() * a.matrix());
        REQUIRE((bracket(a, b).matrix() - want).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("flip symmetry") {
    SECTION("ghz: flag true, phase 0") {
        const FlipResult r = flip_symmetry(ghz_state());
        REQUIRE(r.symmetric);
        REQUIRE(r.phase == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("family4(r, -r, 0, 0): flag true, phase pi") {
        const double r = 1.0 / std::sqrt(2.0);
        const FlipResult f =
            flip_symmetry(family4_state(cd{r, 0}, cd{-r, 0}, cd{0, 0}, cd{0, 0}));
        REQUIRE(f.symmetric);
        REQUIRE(std::abs(f.phase) == Catch::Approx(M_PI).epsilon(1e-12));
    }
    SECTION("product state is not flip symmetric") {
        REQUIRE_FALSE(flip_symmetry(product_state(3)).symmetric);
    }
}

TEST_CASE("classify_stabilizer") {
    SECTION("generic family4: trivial") {
        const StabilizerReport rep = classify_stabilizer(
            family4_state(cd{0.8, 0.1}, cd{0.5, -0.4}, cd{0.9, 0.2}, cd{0.3, 0.6}));
        REQUIRE(rep.dim == 0);
        REQUIRE(rep.label == "trivial");
    }
    SECTION("family4(0,0,c,d) with |c|=|d|: u1+su2") {
        const StabilizerReport rep = classify_stabilizer(
            family4_state(cd{0, 0}, cd{0, 0}, std::polar(0.9, 0.3), std::polar(0.9, -1.1)));
        REQUIRE(rep.dim == 4);
        REQUIRE(rep.derived_dim == 3);
        REQUIRE(rep.label == "u1+su2");
        REQUIRE(rep.closure_residual < 1e-8);
    }
    SECTION("3-qubit product state: u1^3") {
        const StabilizerReport rep = classify_stabilizer(product_state(3));
        REQUIRE(rep.dim == 3);
        REQUIRE(rep.derived_dim == 0);
        REQUIRE(rep.label == "u1^3");
    }
    SECTION("singlet: su2 with exact annihilation") {
        const StabilizerReport rep = classify_stabilizer(singlet_state());
        REQUIRE(rep.dim == 3);
        REQUIRE(rep.derived_dim == 3);
        REQUIRE(rep.label == "su2");
        REQUIRE(rep.closure_residual < 1e-8);
        const Eigen::VectorXcd s = oracles::to_vector(singlet_state());
        for (const auto& el : rep.basis.elements)
            REQUIRE((el.matrix() * s).norm() < 1e-12);
    }
    SECTION("labels and dimensions are invariant under local unitaries") {
        const QubitState base = family4_state(cd{0, 0}, cd{0, 0}, cd{0.9, 0}, cd{0, 0.9});
        const StabilizerReport ref = classify_stabilizer(base);
        for (int t = 0; t < 100; ++t) {
            Rng rng(split_seed(200, t));
            const StabilizerReport rep =
                classify_stabilizer(apply_local_unitary(random_local_unitary(3, rng), base));
            REQUIRE(rep.dim == ref.dim);
            REQUIRE(rep.derived_dim == ref.derived_dim);
            REQUIRE(rep.label == ref.label);
        }
    }
    SECTION("rank-nullity against the orbit dimension") {
        for (int t = 0; t < 10; ++t) {
            const QubitState psi = random_state(3, split_seed(201, t));
            const StabilizerReport rep = classify_stabilizer(psi);
            REQUIRE(rep.dim + orbit_dimension(psi) == 10);
        }
    }
}

TEST_CASE("family4 case table") {
    const auto rows = family4_case_table(5, 77);
    REQUIRE(rows.size() == 9 * 5);
    for (const auto& row : rows) {
        INFO(row.name);
        REQUIRE(row.measured_dim == row.expected_dim);
        if (row.name == "a=b=0, |c|=|d|") REQUIRE(row.label == "u1+su2");
        if (row.name == "a=b=d=0" || row.name == "a=b=c=0") REQUIRE(row.label == "u1^3");
        if (row.name == "c=d=0, a!=b") {
            REQUIRE(row.label == "u1^2");
            REQUIRE_FALSE(row.flip);
        }
        if (row.name == "c=d=0, a=b (GHZ family)") {
            REQUIRE(row.label == "u1^2");
            REQUIRE(row.flip);
        }
        if (row.name == "a,b,c,d nonzero") REQUIRE_FALSE(row.flip);
    }
    SECTION("specialization never decreases the stabilizer dimension") {
        // chains from the case analysis: generic(0) -> a=0(1) -> a=b=0(2) -> |c|=|d|(4)
        std::map<std::string, int> dims;
        for (const auto& row : rows) dims[row.name] = row.measured_dim;
        REQUIRE(dims["a,b,c,d nonzero"] <= dims["a=0"]);
        REQUIRE(dims["a=0"] <= dims["a=b=0, |c|!=|d|"]);
        REQUIRE(dims["a=b=0, |c|!=|d|"] <= dims["a=b=0, |c|=|d|"]);
        REQUIRE(dims["a=b=0, |c|!=|d|"] <= dims["a=b=d=0"]);
        REQUIRE(dims["a,b,c,d nonzero"] <= dims["d=0"]);
        REQUIRE(dims["d=0"] <= dims["c=d=0, a!=b"]);
    }
    SECTION("closure residual stays small on labeled rows") {
        for (const auto& row : rows)
            if (row.label.rfind("unclassified", 0) != 0) {
                const QubitState psi =
                    family4_state(row.params[0], row.params[1], row.params[2], row.params[3]);
                REQUIRE(classify_stabilizer(psi).closure_residual <= 1e-8);
            }
    }
}
