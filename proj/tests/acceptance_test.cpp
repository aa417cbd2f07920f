#include <gtest/gtest.h>

#include "odiam/acceptance.hpp"
#include "odiam/error.hpp"

namespace odiam {
namespace {

TEST(Corpus, ManifestsAreDeterministic) {
  auto a = g678_corpus_manifest(12);
  auto b = g678_corpus_manifest(12);
  ASSERT_EQ(a.size(), 12u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].spec, b[i].spec);
    EXPECT_EQ(a[i].expected_d, 4);
    EXPECT_GE(a[i].expected_gstar, 6);
    EXPECT_LE(a[i].expected_gstar, 8);
  }
  auto nine = g9_corpus_manifest(5);
  ASSERT_EQ(nine.size(), 6u);
  EXPECT_EQ(nine[0].spec.tag, "cycle");
  for (const auto& e : nine) EXPECT_EQ(e.expected_gstar, 9);
}

TEST(Corpus, TamperedManifestRejected) {
  auto m = g9_corpus_manifest(3);
  EXPECT_EQ(load_corpus(m).size(), m.size());
  m[2].expected_gstar = 8;
  try {
    load_corpus(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSpec);
  }
}

TEST(Acceptance, SmallCriteriaPass) {
  AcceptanceOptions opt;
  opt.only = {1, 2, 3, 8};
  opt.rs_triples = 200;
  auto results = run_acceptance(opt);
  ASSERT_EQ(results.size(), 4u);
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.id << " " << r.detail;
  std::string text = acceptance_summary(results);
  EXPECT_EQ(text.rfind("PASS 1 ", 0), 0u);
}

TEST(Acceptance, CorruptedConstructionFails) {
  AcceptanceOptions opt;
  opt.only = {4};
  opt.corrupt_constructions = true;
  auto results = run_acceptance(opt);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].pass);
  EXPECT_NE(acceptance_summary(results).find("FAIL 4 "), std::string::npos);
}

}  // namespace
}  // namespace odiam
