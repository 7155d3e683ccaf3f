#include "awstar/selftest.hpp"

#include <set>

#include <gtest/gtest.h>

namespace awstar::selftest {
namespace {

TEST(Selftest, EveryCasePasses) {
  for (std::uint64_t seed : {1u, 2u}) {
    auto results = run(seed, {});
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) {
      EXPECT_TRUE(r.passed) << r.name << " (seed " << seed << "): " << r.detail;
      EXPECT_GT(r.checks, 0u) << r.name;
    }
  }
}

TEST(Selftest, SortedAndDeterministic) {
  auto a = run(3, {});
  auto b = run(3, {});
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].checks, b[i].checks);
    if (i) EXPECT_LT(a[i - 1].name, a[i].name);
    names.insert(a[i].name.substr(0, a[i].name.find('.')));
  }
  for (const char* m : {"cardinal", "fdalg", "projlat", "masa", "diag", "dimension", "functor"})
    EXPECT_TRUE(names.count(m)) << m;
}

}  // namespace
}  // namespace awstar::selftest
