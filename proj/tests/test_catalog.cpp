/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tdlab/catalog.hpp"

using namespace tdlab;

namespace {

const RationalField Q;

Rational r(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }
std::vector<Rational> rs(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.push_back(r(x));
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kPauliDoc = R"({
  "label": "dim1-pauli",
  "field": {"kind": "rational"},
  "n": 2,
  "A": [[0, 1], [1, 0]],
  "Astar": [[1, 0], [0, -1]]
})";

}  // namespace

TEST(Krawtchouk, Examples) {
  auto d1 = gen_krawtchouk(1, FieldSpec::rational());
  EXPECT_EQ(d1.A, rs({0, 1, 1, 0}));
  EXPECT_EQ(d1.Astar, rs({1, 0, 0, -1}));

  auto d2 = gen_krawtchouk(2, FieldSpec::rational());
  EXPECT_EQ(d2.A, rs({0, 2, 0, 1, 0, 1, 0, 2, 0}));
  EXPECT_EQ(d2.Astar, rs({2, 0, 0, 0, 0, 0, 0, 0, -2}));
  // char poly of A is lambda^3 - 4 lambda
  auto [a, as] = to_matrices(d2, Q);
  auto cp = oracle::char_poly_cofactor(oracle::to_q(a));
  EXPECT_EQ(cp, (oracle::QPoly{0, -4, 0, 1}));

  auto g13 = gen_krawtchouk(2, FieldSpec::prime(13));
  EXPECT_EQ(g13.A, d2.A);
  EXPECT_EQ(g13.Astar, rs({2, 0, 0, 0, 0, 0, 0, 0, 11}));
  EXPECT_TRUE(verify_document(g13).accepted);

  EXPECT_THROW(gen_krawtchouk(7, FieldSpec::prime(13)), std::invalid_argument);
  EXPECT_NO_THROW(gen_krawtchouk(6, FieldSpec::prime(13)));
}

TEST(Krawtchouk, DiameterAndShape) {
  for (std::size_t d = 0; d <= 5; ++d) {
    for (const auto& f : {FieldSpec::rational(), FieldSpec::prime(13), FieldSpec::prime(101)}) {
      if (f.kind == FieldSpec::Kind::Prime && f.p <= 2 * d) continue;
      auto v = verify_document(gen_krawtchouk(d, f));
      EXPECT_TRUE(v.accepted);
      EXPECT_EQ(v.diameter, d);
      EXPECT_EQ(v.rho, std::vector<std::size_t>(d + 1, 1));
    }
  }
}

TEST(SplitForm, Examples) {
  auto ok = gen_split_form(FieldSpec::rational(), rs({1, -1}), rs({1, -1}), rs({2}));
  ASSERT_TRUE(ok.document);
  EXPECT_TRUE(ok.verdict.accepted);
  EXPECT_EQ(ok.verdict.diameter, 1u);

  // either outcome is fine; the document is present exactly when accepted
  auto maybe = gen_split_form(FieldSpec::rational(), rs({0, 1, 2}), rs({0, 1, 2}), rs({1, 1}));
  EXPECT_EQ(maybe.document.has_value(), maybe.verdict.accepted);
  if (maybe.document) {
    EXPECT_TRUE(verify_document(*maybe.document).accepted);
  }

  EXPECT_THROW(gen_split_form(FieldSpec::rational(), rs({1, -1}), rs({1, -1}), rs({0})), std::invalid_argument);
  EXPECT_THROW(gen_split_form(FieldSpec::rational(), rs({1, 1}), rs({1, -1}), rs({2})), std::invalid_argument);
  EXPECT_THROW(gen_split_form(FieldSpec::rational(), rs({1, -1}), rs({1}), rs({2})), std::invalid_argument);
  EXPECT_THROW(gen_split_form(FieldSpec::prime(13), rs({1, 14}), rs({1, -1}), rs({2})), std::invalid_argument);
}

TEST(SplitForm, RejectionCarriesTheVerdict) {
  auto bad = gen_split_form(FieldSpec::rational(), rs({3, 1, -1, -3}), rs({3, 1, -1, -3}), rs({1, 1, 1}));
  EXPECT_FALSE(bad.document);
  EXPECT_FALSE(bad.verdict.accepted);
  EXPECT_FALSE(bad.verdict.failures.empty());
}

TEST(SplitForm, FrozenFixtureRegenerates) {
  auto res = gen_split_form(FieldSpec::rational(), rs({1, 2, 4, 8}), rs({1, 2, 4, 8}), rs({28, 27, 7}));
  ASSERT_TRUE(res.document);
  auto frozen = load_document_file(oracle::fixture("split-d3.json"));
  EXPECT_EQ(res.document->A, frozen.A);
  EXPECT_EQ(res.document->Astar, frozen.Astar);
}

TEST(Document, LoadSpecExample) {
  auto doc = load_document(kPauliDoc);
  EXPECT_EQ(doc.label, "dim1-pauli");
  EXPECT_EQ(doc.n, 2u);
  EXPECT_EQ(doc.A, rs({0, 1, 1, 0}));
  EXPECT_TRUE(doc.provenance.empty());
  // canonical form is stable
  auto once = save_document(doc);
  EXPECT_EQ(save_document(load_document(once)), once);
  EXPECT_EQ(load_document(once), doc);
}

TEST(Document, CanonicalisesRationals) {
  auto doc = load_document(R"({"label":"x","field":{"kind":"rational"},"n":1,"A":[["3/6"]],"Astar":[["-4/2"]]})");
  EXPECT_EQ(doc.A[0], r(1, 2));
  auto text = save_document(doc);
  EXPECT_NE(text.find("[\"1/2\"]"), std::string::npos);
  EXPECT_NE(text.find("[-2]"), std::string::npos);
}

TEST(Document, ParseErrors) {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    try {
      load_document(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error(R"({"label":"x","field":{"kind":"prime","p":4},"n":1,"A":[[1]],"Astar":[[1]]})", "p not prime");
  expect_error(R"({"label":"x","field":{"kind":"prime","p":5},"n":1,"A":[[5]],"Astar":[[1]]})", "out of field");
  expect_error(R"({"label":"x","field":{"kind":"prime","p":5},"n":1,"A":[[-1]],"Astar":[[1]]})", "out of field");
  expect_error(R"({"label":"x","field":{"kind":"prime","p":5},"n":1,"A":[["1/2"]],"Astar":[[1]]})", "out of field");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":2,"A":[[1,0]],"Astar":[[1,0],[0,1]]})", "'A'");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":2,"A":[[1,0],[0]],"Astar":[[1,0],[0,1]]})", "A[1]");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":1,"A":[["1/0"]],"Astar":[[1]]})", "A[0][0]");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":1,"A":[[1.5]],"Astar":[[1]]})", "A[0][0]");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":0,"A":[],"Astar":[]})", "'n'");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":1,"A":[[1]]})", "Astar");
  expect_error(R"({"field":{"kind":"rational"},"n":1,"A":[[1]],"Astar":[[1]]})", "label");
  expect_error(R"({"label":"x","field":{"kind":"real"},"n":1,"A":[[1]],"Astar":[[1]]})", "field.kind");
  expect_error(R"({"label":"x","field":{"kind":"rational"},"n":1,"A":[[1]],"Astar":[[1]]} trailing)", "malformed JSON");
  expect_error(R"([1,2])", "object");
  expect_error("{\"label\":", "malformed JSON");
}

TEST(Document, FixturesRoundTripByteIdentically) {
  for (const auto& name : oracle::accepted_fixtures()) {
    SCOPED_TRACE(name);
    const auto bytes = slurp(oracle::fixture(name));
    const auto doc = load_document(bytes);
    EXPECT_EQ(save_document(doc), bytes);
    EXPECT_EQ(load_document(save_document(doc)), doc);
    EXPECT_FALSE(doc.provenance.empty());
  }
}

TEST(Document, KrawtchoukFixturesMatchTheGenerator) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const std::pair<const char*, FieldSpec> cases[] = {
        {"", FieldSpec::rational()}, {"-gf13", FieldSpec::prime(13)}, {"-gf101", FieldSpec::prime(101)}};
    for (const auto& [suffix, field] : cases) {
      const auto name = "krawtchouk-d" + std::to_string(d) + suffix + ".json";
      SCOPED_TRACE(name);
      EXPECT_EQ(save_document(gen_krawtchouk(d, field)), slurp(oracle::fixture(name)));
    }
  }
}

TEST(Document, EveryFixtureIsAcceptedExceptTheNegativeCase) {
  for (const auto& name : oracle::accepted_fixtures()) EXPECT_TRUE(verify_document(load_document_file(oracle::fixture(name))).accepted) << name;
  auto nil = verify_document(load_document_file(oracle::fixture("nilpotent.json")));
  EXPECT_FALSE(nil.accepted);
  EXPECT_EQ(nil.failures.front().axiom, Axiom::Diagonalizable);
}

TEST(Document, ToMatricesChecksTheField) {
  auto doc = load_document(kPauliDoc);
  EXPECT_THROW(to_matrices(doc, PrimeField(13)), std::invalid_argument);
  auto [a, as] = to_matrices(doc, Q);
  EXPECT_EQ(make_document("dim1-pauli", a, as), doc);
}
