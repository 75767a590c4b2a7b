/*
 *  Copyright (C) 2026  The paraseq authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <gtest/gtest.h>

#include "paraseq/core/signature.hpp"

using namespace paraseq;

TEST(Signature, InterningIsIdempotent) {
    Signature sig;
    AtomId a = sig.objective("a");
    EXPECT_EQ(sig.objective("a"), a);
    EXPECT_EQ(sig.belief(a), sig.belief(a));
    EXPECT_EQ(sig.size(), 2u);
}

TEST(Signature, GeneratedNamesUseReservedPrefixes) {
    Signature sig;
    AtomId a = sig.objective("a");
    EXPECT_EQ(sig.name(sig.belief(a)), "k_a");
    EXPECT_EQ(sig.name(sig.gamma(a)), "gamma_a");
    EXPECT_EQ(sig.name(sig.lambda(3, 2)), "lambda_3_2");
    EXPECT_EQ(sig.name(sig.constraint_head(1)), "cstr_1");
    EXPECT_TRUE(is_reserved_name("k_a"));
    EXPECT_TRUE(is_reserved_name("gamma_x"));
    EXPECT_FALSE(is_reserved_name("kappa"));
    EXPECT_FALSE(is_reserved_name("a"));
}

TEST(Signature, InternRecoversKind) {
    Signature sig;
    AtomId kb = sig.intern("k_b");
    EXPECT_EQ(sig.kind(kb), AtomKind::belief);
    EXPECT_EQ(sig.name(sig.info(kb).base), "b");
    EXPECT_EQ(sig.kind(sig.intern("gamma_b")), AtomKind::gamma);
    EXPECT_EQ(sig.kind(sig.intern("lambda_1_2")), AtomKind::lambda);
    EXPECT_EQ(sig.kind(sig.intern("cstr_4")), AtomKind::constraint_head);
    EXPECT_EQ(sig.kind(sig.intern("plain")), AtomKind::objective);
}

TEST(Signature, ConstraintHeadsAreBaseAtoms) {
    Signature sig;
    EXPECT_TRUE(sig.is_base(sig.constraint_head(1)));
    EXPECT_TRUE(sig.is_base(sig.objective("a")));
    EXPECT_FALSE(sig.is_base(sig.belief(sig.objective("a"))));
}

TEST(Signature, BeliefOfBeliefIsRejected) {
    Signature sig;
    AtomId ka = sig.belief(sig.objective("a"));
    EXPECT_THROW(sig.belief(ka), std::invalid_argument);
}

TEST(Signature, DisplayAndOrdering) {
    Signature sig;
    AtomId b = sig.objective("b"), a = sig.objective("a");
    AtomId kb = sig.belief(b), ka = sig.belief(a);
    EXPECT_EQ(sig.display(kb), "K(b)");
    EXPECT_LT(sig.sort_key(a), sig.sort_key(ka));
    EXPECT_LT(sig.sort_key(ka), sig.sort_key(b));
    EXPECT_LT(sig.sort_key(b), sig.sort_key(kb));
}
