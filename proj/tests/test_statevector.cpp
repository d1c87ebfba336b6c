// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qtele/bell.hpp"
#include "qtele/errors.hpp"
#include "qtele/statevector.hpp"
#include "test_support.hpp"

namespace qtele {
namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

StateVector plus_state(const QubitLabel &q) {
    return StateVector({q}, {kInvSqrt2, kInvSqrt2});
}

TEST(MakeBasisState, SingleQubitZero) {
    const auto s = make_basis_state({"a"}, "0");
    ASSERT_EQ(s.dimension(), 2U);
    EXPECT_EQ(s[0], Amplitude(1.0));
    EXPECT_EQ(s[1], Amplitude(0.0));
}

TEST(MakeBasisState, FourQubitZero) {
    const auto s = make_basis_state(register_from_chars("efgh"), "0000");
    ASSERT_EQ(s.dimension(), 16U);
    EXPECT_EQ(s[0], Amplitude(1.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(MakeBasisState, IndexMatchesPerBitPlacement) {
    const std::string bits = "11011111";
    EXPECT_EQ(testing::place_bits(bits), 223U);
    EXPECT_EQ(basis_index(bits), testing::place_bits(bits));
    const auto s = make_basis_state(register_from_chars("abcdefgh"), bits);
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        EXPECT_EQ(s[i], Amplitude(i == 223 ? 1.0 : 0.0)) << i;
    }
}

TEST(MakeBasisState, AgreesWithPlacementOnAllShortStrings) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
            std::string bits;
            for (std::size_t k = 0; k < n; ++k) {
                bits += ((v >> (n - 1 - k)) & 1U) ? '1' : '0';
            }
            EXPECT_EQ(basis_index(bits), testing::place_bits(bits));
        }
    }
}

TEST(MakeBasisState, Errors) {
    EXPECT_THROW(make_basis_state(register_from_chars("ab"), "0"), Error);
    EXPECT_THROW(make_basis_state({"a", "a"}, "00"), LabelError);
}

TEST(StateVectorCtor, Validates) {
    EXPECT_THROW(StateVector({"a"}, {1.0, 0.0, 0.0}), DimensionError);
    EXPECT_THROW(StateVector({"a"}, {1.0, 1.0}), NormalizationError);
    EXPECT_THROW(StateVector({"a"}, {std::nan(""), 0.0}), NormalizationError);
    EXPECT_THROW(StateVector({"a", "a"}, {1.0, 0.0, 0.0, 0.0}), LabelError);
    EXPECT_THROW(StateVector::normalized({"a"}, {0.0, 0.0}), NormalizationError);
}

TEST(StateVectorCtor, QubitCap) {
    Register r17;
    for (int k = 0; k < 17; ++k) {
        r17.emplace_back("q" + std::to_string(k));
    }
    std::vector<Amplitude> amps(std::size_t{1} << 17);
    amps[0] = 1.0;
    EXPECT_THROW(StateVector(r17, amps), DimensionError);
}

TEST(ApplyGate, CnotTruthTable) {
    const auto s = apply_gate(make_basis_state({"a", "b"}, "10"), GateOp::cnot("a", "b"));
    EXPECT_EQ(s, make_basis_state({"a", "b"}, "11"));
}

TEST(ApplyGate, SwapExchanges) {
    const auto s = apply_gate(make_basis_state({"b", "c"}, "01"), GateOp::swap("b", "c"));
    EXPECT_EQ(s, make_basis_state({"b", "c"}, "10"));
}

TEST(ApplyGate, ZFlipsPlus) {
    const auto s = apply_gate(plus_state("a"), GateOp::single(GateKind::Z, "a"));
    EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(s[1].real(), -kInvSqrt2, 1e-15);
}

TEST(ApplyGate, Errors) {
    const auto s = make_basis_state({"a", "b"}, "00");
    EXPECT_THROW(apply_gate(s, GateOp::cnot("a", "z")), LabelError);
    EXPECT_THROW(GateOp::cnot("a", "a"), LabelError);
    EXPECT_THROW(GateOp(GateKind::H, {"a", "b"}), Error);
}

TEST(ApplyGate, MatchesDenseOracleOnEveryKindAndPosition) {
    Rng rng(21);
    const Register reg = register_from_chars("abcde");
    const std::vector<GateKind> singles{GateKind::H, GateKind::X, GateKind::Y,
                                        GateKind::Z, GateKind::I};
    for (std::size_t i = 0; i < reg.size(); ++i) {
        const auto s = testing::random_state(reg, rng);
        for (auto k : singles) {
            const GateOp op = GateOp::single(k, reg[i]);
            EXPECT_LE(testing::max_abs_diff(apply_gate(s, op).amplitudes(),
                                            testing::dense_apply(s, op)),
                      1e-14)
                << to_string(op);
        }
        for (std::size_t j = 0; j < reg.size(); ++j) {
            if (i == j) {
                continue;
            }
            for (const auto &op : {GateOp::cnot(reg[i], reg[j]), GateOp::swap(reg[i], reg[j])}) {
                EXPECT_LE(testing::max_abs_diff(apply_gate(s, op).amplitudes(),
                                                testing::dense_apply(s, op)),
                          1e-14)
                    << to_string(op);
            }
        }
    }
}

std::vector<GateOp> every_gate(const Register &reg) {
    std::vector<GateOp> ops;
    for (auto k : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::I}) {
        ops.push_back(GateOp::single(k, reg[1]));
    }
    ops.push_back(GateOp::cnot(reg[0], reg[2]));
    ops.push_back(GateOp::cnot(reg[2], reg[0]));
    ops.push_back(GateOp::swap(reg[0], reg[3]));
    return ops;
}

TEST(Invariants, UnitarityOverSeededTrials) {
    const Register reg = register_from_chars("abcd");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const auto s = testing::random_state(reg, rng);
        for (const auto &op : every_gate(reg)) {
            EXPECT_NEAR(apply_gate(s, op).norm_squared(), 1.0, 1e-12);
        }
    }
}

TEST(Invariants, SelfInverse) {
    const Register reg = register_from_chars("abcd");
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = testing::random_state(reg, rng);
        for (const auto &op : every_gate(reg)) {
            const auto twice = apply_gate(apply_gate(s, op), op);
            if (op.kind() == GateKind::Y) {
                EXPECT_NEAR(fidelity(s, twice), 1.0, 1e-12);
            } else {
                EXPECT_LE(max_deviation(s, twice), 1e-12) << to_string(op);
            }
        }
    }
}

TEST(ApplyCircuit, EmptyIsIdentity) {
    Rng rng(23);
    const auto s = testing::random_state(register_from_chars("ab"), rng);
    EXPECT_EQ(apply_circuit(s, Circuit(s.labels())), s);
}

TEST(ApplyCircuit, DoubleCnotIsIdentity) {
    Rng rng(24);
    const auto s = testing::random_state(register_from_chars("abc"), rng);
    Circuit c(s.labels());
    c.append(GateOp::cnot("a", "b")).append(GateOp::cnot("a", "b"));
    EXPECT_LE(max_deviation(apply_circuit(s, c), s), 1e-15);
}

TEST(ApplyCircuit, ListOrderIsApplicationOrder) {
    // X then CNOT a->b sends |00> to |11>; the reverse order gives |10>
    Circuit c(register_from_chars("ab"));
    c.append(GateOp::single(GateKind::X, "a")).append(GateOp::cnot("a", "b"));
    const auto s = make_basis_state(register_from_chars("ab"), "00");
    EXPECT_EQ(apply_circuit(s, c), make_basis_state(register_from_chars("ab"), "11"));
    EXPECT_EQ(apply_circuit(s, from_operator_product(c.qubits(), c.ops())),
              make_basis_state(register_from_chars("ab"), "10"));
}

TEST(Tensor, BasisKets) {
    const auto s = tensor(make_basis_state({"a"}, "0"), make_basis_state({"b"}, "1"));
    EXPECT_EQ(s, make_basis_state({"a", "b"}, "01"));
}

TEST(Tensor, TwoPhiPlusByHand) {
    const auto s = tensor(bell_state(BellLabel::PhiPlus, "A1", "B1"),
                          bell_state(BellLabel::PhiPlus, "A2", "B2"));
    EXPECT_EQ(s.labels(), (Register{"A1", "B1", "A2", "B2"}));
    // (x0 + x3)(y0 + y3)/2 places 1/2 at 0*4+0, 0*4+3, 3*4+0, 3*4+3
    for (std::size_t i = 0; i < 16; ++i) {
        const bool on = i == 0 || i == 3 || i == 12 || i == 15;
        EXPECT_NEAR(std::abs(s[i] - Amplitude(on ? 0.5 : 0.0)), 0.0, 1e-15) << i;
    }
}

TEST(Tensor, NormAndOverlap) {
    Rng rng(25);
    EXPECT_THROW(tensor(make_basis_state({"a"}, "0"), make_basis_state({"a"}, "1")),
                 LabelError);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = testing::random_state({"a", "b"}, rng);
        const auto b = testing::random_state({"c"}, rng);
        const auto c = testing::random_state({"a", "b"}, rng);
        const auto d = testing::random_state({"c"}, rng);
        EXPECT_NEAR(tensor(a, b).norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(fidelity(tensor(a, b), tensor(c, d)), fidelity(a, c) * fidelity(b, d),
                    1e-10);
    }
}

TEST(Fidelity, Examples) {
    Rng rng(26);
    const auto s = testing::random_state(register_from_chars("abc"), rng);
    EXPECT_NEAR(fidelity(s, s), 1.0, 1e-14);
    EXPECT_EQ(fidelity(make_basis_state({"a"}, "0"), make_basis_state({"a"}, "1")), 0.0);
    for (double theta : {0.3, 1.2, 2.9, -2.0}) {
        auto t = s;
        t.multiply_phase(std::polar(1.0, theta));
        EXPECT_NEAR(fidelity(s, t), 1.0, 1e-14);
    }
    EXPECT_THROW(fidelity(s, testing::random_state(register_from_chars("abd"), rng)), LabelError);
}

TEST(Fidelity, AlignsLabelOrder) {
    Rng rng(27);
    const auto s = testing::random_state(register_from_chars("abc"), rng);
    const auto p = permute_to(s, register_from_chars("cab"));
    EXPECT_NEAR(fidelity(s, p), 1.0, 1e-14);
}

TEST(PermuteTo, Examples) {
    const auto s = make_basis_state({"a", "b"}, "01");
    EXPECT_EQ(permute_to(s, {"a", "b"}), s);
    const auto p = permute_to(s, {"b", "a"});
    EXPECT_EQ(p, make_basis_state({"b", "a"}, "10"));
    EXPECT_THROW(permute_to(s, {"a", "c"}), LabelError);
    EXPECT_THROW(permute_to(s, {"a"}), LabelError);
}

TEST(PermuteTo, RoundTripIsBitExact) {
    Rng rng(28);
    const auto s = testing::random_state(register_from_chars("abcde"), rng);
    const auto p = permute_to(s, register_from_chars("dbeac"));
    EXPECT_EQ(permute_to(p, s.labels()), s);
}

TEST(ProductCheck, BasisProduct) {
    const auto r = product_check(make_basis_state({"a", "b"}, "00"), {"a"});
    ASSERT_TRUE(r.is_product);
    ASSERT_TRUE(r.factor.has_value());
    EXPECT_NEAR(fidelity(*r.factor, make_basis_state({"a"}, "0")), 1.0, 1e-14);
}

TEST(ProductCheck, BellPairIsEntangled) {
    const auto r = product_check(bell_state(BellLabel::PhiPlus, "a", "b"), {"a"});
    EXPECT_FALSE(r.is_product);
    EXPECT_FALSE(r.factor.has_value());
}

TEST(ProductCheck, InvalidSubsets) {
    const auto s = make_basis_state({"a", "b"}, "00");
    EXPECT_THROW(product_check(s, {}), LabelError);
    EXPECT_THROW(product_check(s, {"a", "b"}), LabelError);
    EXPECT_THROW(product_check(s, {"z"}), LabelError);
}

TEST(ProductCheck, SoundOnRandomProducts) {
    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = testing::random_state({"b", "d"}, rng);
        const auto y = testing::random_state({"a", "c", "e"}, rng);
        const auto s = permute_to(tensor(x, y), register_from_chars("abcde"));
        const auto r = product_check(s, {"d", "b"});
        ASSERT_TRUE(r.is_product);
        EXPECT_EQ(r.factor->labels(), (Register{"d", "b"}));
        EXPECT_GE(fidelity(tensor(*r.factor, *r.rest), s), 1.0 - 1e-10);
        EXPECT_NEAR(fidelity(*r.factor, x), 1.0, 1e-10);
    }
}

TEST(ProductCheck, RejectsGenericStates) {
    Rng rng(30);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = testing::random_state(register_from_chars("abcd"), rng);
        EXPECT_FALSE(product_check(s, {"a", "c"}).is_product);
    }
}

TEST(Relabeled, RenamesWithoutTouchingAmplitudes) {
    Rng rng(31);
    const auto s = testing::random_state({"a", "b"}, rng);
    const auto r = relabeled(s, {{"a", "x"}});
    EXPECT_EQ(r.labels(), (Register{"x", "b"}));
    EXPECT_TRUE(std::equal(s.amplitudes().begin(), s.amplitudes().end(),
                           r.amplitudes().begin()));
    EXPECT_THROW(relabeled(s, {{"a", "b"}}), LabelError);
}

} // namespace
} // namespace qtele
