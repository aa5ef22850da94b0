#include <doctest.h>

#include <algorithm>
#include <set>

#include "cwm/error.hpp"
#include "cwm/partition.hpp"
#include "helpers.hpp"

using cwm::CyclicPartition;
using testing::label;

TEST_CASE("canonical form puts the part holding n last") {
  auto p = CyclicPartition::canonicalize(6, std::vector<std::vector<int>>{{3}, {1}, {2, 4, 5, 6}});
  CHECK(p.to_string() == "3|1|2,4,5,6");
  CHECK(p == label("3|1|4,2,5,6", 6));
  CHECK(p != label("1|3|2,4,5,6", 6));

  auto r = CyclicPartition::canonicalize(5, std::vector<std::vector<int>>{{4, 5}, {1}, {2}, {3}});
  CHECK(r.to_string() == "1|2|3|4,5");

  auto fixed = label("1|2|3|4|5", 5);
  CHECK(fixed.to_string() == "1|2|3|4|5");
  CHECK(fixed.all_singletons());
  CHECK(fixed.dimension() == 2);
}

TEST_CASE("label text round-trips") {
  for (const char* text : {"1|2|3|4,5", "5,1|2|3,4", "2,3|1|4"}) {
    auto p = CyclicPartition::parse(text);
    CHECK(CyclicPartition::parse(p.to_string()) == p);
  }
  CHECK(CyclicPartition::parse("5,1|2|3,4").to_string() == "2|3,4|1,5");
}

TEST_CASE("malformed labels are rejected") {
  CHECK_THROWS_AS(CyclicPartition::parse("1|2|2"), cwm::DomainError);
  CHECK_THROWS_AS(CyclicPartition::parse("1||2,3"), cwm::DomainError);
  CHECK_THROWS_AS(CyclicPartition::parse("1|2|4"), cwm::DomainError);
  CHECK_THROWS_AS(CyclicPartition::parse("1|2|x"), cwm::DomainError);
  CHECK_THROWS_AS(CyclicPartition::parse("1|2|3", 4), cwm::DomainError);
}

TEST_CASE("part lookup, relabeling and reversal") {
  auto p = label("1|4|2,3,5", 5);
  CHECK(p.part_of(4) == 1);
  CHECK(p.part_of(3) == 2);
  CHECK(p.reversed() == label("4|1|2,3,5", 5));
  CHECK(p.reversed().reversed() == p);
  std::vector<int> shift = {2, 3, 4, 5, 1};
  CHECK(p.relabeled(shift) == label("2|5|3,4,1", 5));
}

TEST_CASE("admissibility of labels") {
  auto hex = testing::linkage("3,1,1,4,4");
  auto torus = testing::linkage("1.2,1,1,0.8,2.2");
  CHECK(cwm::is_admissible(label("1|2|3|4|5", 5), torus));
  CHECK(cwm::is_admissible(label("1|4|2,3,5", 5), hex));
  CHECK_FALSE(cwm::is_admissible(label("1,2,3|4|5", 5), torus));
  CHECK_THROWS_AS(cwm::is_admissible(label("1|2|3,4", 4), torus), cwm::DomainError);
}

TEST_CASE("refinement examples") {
  CHECK(cwm::refines(label("1|2|3|4|5", 5), label("1,2|3|4,5", 5)));
  CHECK_FALSE(cwm::refines(label("1|3|2|4|5", 5), label("1,2|3|4,5", 5)));
  auto p = label("2|1|3,4|5", 5);
  CHECK(cwm::refines(p, p));
  // Runs may wrap around the canonical cut.
  CHECK(cwm::refines(label("1|2|3|4|5", 5), label("2|3|4|1,5", 5)));
}

TEST_CASE("refinement agrees with reachability by single merges") {
  const int n = 5;
  std::vector<CyclicPartition> all;
  for (int m = 1; m <= n; ++m)
    for (auto& l : oracle::cyclic_partitions(n, m)) all.push_back(CyclicPartition::canonicalize(n, l));
  // A sample of fine labels against every coarser candidate.
  for (std::size_t i = 0; i < all.size(); i += 7) {
    auto reach = oracle::all_coarsenings(testing::as_oracle(all[i]), n);
    for (const auto& c : all) {
      bool expected = c == all[i] || reach.count(testing::as_oracle(c)) > 0;
      CHECK(cwm::refines(all[i], c) == expected);
    }
  }
}

TEST_CASE("refinement runs") {
  auto runs = cwm::refinement_runs(label("1|2|3|4|5", 5), label("2|3|4|1,5", 5));
  REQUIRE(runs.has_value());
  REQUIRE(runs->size() == 4);
  CHECK(runs->back() == std::vector<cwm::IndexSet>{cwm::element_bit(5), cwm::element_bit(1)});
  CHECK_FALSE(cwm::refinement_runs(label("1|3|2|4|5", 5), label("1,2|3|4,5", 5)).has_value());
}

TEST_CASE("coarsenings") {
  auto three = cwm::coarsenings(label("1|2|3", 3));
  std::vector<std::string> texts;
  for (auto& c : three) texts.push_back(c.to_string());
  CHECK(texts == std::vector<std::string>{"1|2,3", "1,2|3", "1,2,3", "2|1,3"});

  CHECK(cwm::coarsenings(label("1,2,3", 3)).empty());

  // Four parts: counts by size frozen from the merge-reachability oracle.
  auto four = label("1|2|3|4", 4);
  auto got = cwm::coarsenings(four);
  auto expected = oracle::all_coarsenings(testing::as_oracle(four), 4);
  std::map<int, int> by_size, oracle_by_size;
  for (auto& c : got) ++by_size[c.size()];
  for (auto& c : expected) ++oracle_by_size[static_cast<int>(c.size())];
  CHECK(by_size == oracle_by_size);
  CHECK(by_size == std::map<int, int>{{1, 1}, {2, 6}, {3, 4}});
  CHECK(std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("coarsenings agree with the oracle on every label with n <= 5") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m <= n; ++m)
      for (auto& l : oracle::cyclic_partitions(n, m)) {
        auto got = cwm::coarsenings(CyclicPartition::canonicalize(n, l));
        std::set<oracle::Label> got_set;
        for (auto& c : got) got_set.insert(testing::as_oracle(c));
        CHECK(got_set.size() == got.size());
        CHECK(got_set == oracle::all_coarsenings(l, n));
      }
}

TEST_CASE("meet examples") {
  auto eq = testing::linkage("1,1,1,1,1");
  auto a = label("1|2|3|4|5", 5);
  CHECK(cwm::meet(a, a, eq) == a);
  CHECK(cwm::meet(a, label("2|1|3|4|5", 5), eq) == label("1,2|3|4|5", 5));

  auto b = label("3|4|1|2|5", 5);
  auto expected = oracle::meet(testing::as_oracle(a), testing::as_oracle(b), testing::lengths_of(eq));
  auto got = cwm::meet(a, b, eq);
  CHECK(expected.size() <= 1);
  CHECK(got.has_value() == !expected.empty());
  if (got) CHECK(testing::as_oracle(*got) == expected.front());
  CHECK_FALSE(got.has_value());  // frozen from the oracle
}

TEST_CASE("meet agrees with the oracle on all facet pairs") {
  for (const char* text : {"1,1,1,1,1", "6/5,1,1,4/5,11/5", "3,1,1,4,4", "1,1,1,1/2"}) {
    auto l = testing::linkage(text);
    const int n = l.size();
    auto lengths = testing::lengths_of(l);
    auto facets = cwm::enumerate_admissible(l, n);
    auto vertices = cwm::enumerate_admissible(l, 3);
    std::vector<CyclicPartition> sample = facets;
    sample.insert(sample.end(), vertices.begin(), vertices.end());
    for (const auto& x : facets)
      for (const auto& y : sample) {
        auto expected = oracle::meet(testing::as_oracle(x), testing::as_oracle(y), lengths);
        REQUIRE(expected.size() <= 1);
        auto got = cwm::meet(x, y, l);
        CHECK(got.has_value() == !expected.empty());
        if (got && !expected.empty()) CHECK(testing::as_oracle(*got) == expected.front());
      }
  }
}

TEST_CASE("enumeration examples") {
  auto eq = testing::linkage("1,1,1,1,1");
  CHECK(cwm::enumerate_admissible(eq, 5).size() == 24);
  CHECK(cwm::enumerate_admissible(eq, 3).size() == 30);
  CHECK(cwm::enumerate_admissible(testing::linkage("1,1,1,1/2"), 3).size() == 6);
  CHECK_THROWS_AS(cwm::enumerate_admissible(eq, 2), cwm::DomainError);
  CHECK_THROWS_AS(cwm::enumerate_admissible(eq, 6), cwm::DomainError);
}

TEST_CASE("enumeration agrees with the oracle") {
  for (const auto& text : testing::sweep_linkages()) {
    auto l = testing::linkage(text);
    auto lengths = testing::lengths_of(l);
    for (int m = 3; m <= l.size(); ++m) {
      auto got = cwm::enumerate_admissible(l, m);
      CHECK(std::is_sorted(got.begin(), got.end()));
      std::set<oracle::Label> got_set;
      for (auto& c : got) got_set.insert(testing::as_oracle(c));
      CHECK(got_set.size() == got.size());
      CHECK(got_set == oracle::admissible_labels(lengths, m));
    }
  }
}

TEST_CASE("keys are injective and hashing is consistent") {
  std::set<std::uint64_t> keys;
  std::size_t count = 0;
  for (int m = 1; m <= 5; ++m)
    for (auto& l : oracle::cyclic_partitions(5, m)) {
      auto p = CyclicPartition::canonicalize(5, l);
      keys.insert(p.key());
      ++count;
      CHECK(std::hash<CyclicPartition>{}(p) == std::hash<CyclicPartition>{}(CyclicPartition::parse(p.to_string(), 5)));
    }
  CHECK(keys.size() == count);
}
