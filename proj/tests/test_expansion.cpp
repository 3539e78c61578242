#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "termex/errors.hpp"
#include "termex/expansion.hpp"
#include "termex/rng.hpp"

using namespace termex;

namespace {

NeighborSet neighbor_set(std::string query, const std::vector<std::string>& words) {
  NeighborSet set;
  set.query = std::move(query);
  set.k = words.size();
  double cosine = 0.99;
  for (const auto& word : words) {
    set.neighbors.emplace_back(word, cosine);
    cosine -= 0.001;
  }
  return set;
}

// Index where each seed's neighborhood is planted explicitly: the seed gets a
// distinctive direction and its wanted neighbors lie close to it.
struct PlantedIndex {
  VectorIndex index;
  std::map<std::string, std::vector<std::string>> wanted;  // seed -> neighbor words
};

// Enumeration oracle: all seed subsets of sizes [lo, hi], intersect their
// neighbor word sets, union everything; also recompute supporting seeds.
std::map<std::string, std::set<std::string>> enumeration_oracle(
    const std::map<std::string, std::set<std::string>>& neighbors_by_seed,
    const std::vector<std::string>& seed_order, std::size_t lo, std::size_t hi,
    const std::set<std::string>& all_seeds) {
  const std::size_t n = seed_order.size();
  std::map<std::string, std::set<std::string>> result;  // word -> supporting seeds
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < lo || size > hi) continue;

    std::vector<const std::set<std::string>*> chosen;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) chosen.push_back(&neighbors_by_seed.at(seed_order[i]));

    std::set<std::string> common = *chosen[0];
    for (std::size_t i = 1; i < chosen.size(); ++i) {
      std::set<std::string> next;
      std::set_intersection(common.begin(), common.end(), chosen[i]->begin(),
                            chosen[i]->end(), std::inserter(next, next.begin()));
      common = std::move(next);
    }
    for (const auto& word : common) {
      if (all_seeds.count(word)) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) result[word].insert(seed_order[i]);
    }
  }
  return result;
}

}  // namespace

TEST_SUITE("expansion") {

TEST_CASE("relation spec validation") {
  RelationSpec spec;
  spec.relation = Relation::CAUSE;
  spec.seeds = {"only"};
  CHECK_THROWS_AS(spec.validate(), DataError);
  spec.seeds = {"a", "a"};
  CHECK_THROWS_AS(spec.validate(), DataError);
  spec.seeds = {"a", "b"};
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("intersect keeps words present in every set") {
  std::vector<NeighborSet> sets;
  sets.push_back(neighbor_set("a", {"x", "y"}));
  sets.push_back(neighbor_set("b", {"x", "z"}));
  CHECK(intersect(sets) == std::vector<std::string>{"x"});

  sets.clear();
  sets.push_back(neighbor_set("a", {"p", "q"}));
  sets.push_back(neighbor_set("b", {"q", "p"}));
  CHECK(intersect(sets) == std::vector<std::string>{"p", "q"});

  std::vector<NeighborSet> one;
  one.push_back(neighbor_set("a", {"x"}));
  CHECK_THROWS_AS(intersect(one), std::invalid_argument);
}

TEST_CASE("intersect matches a hash-set oracle on random fixtures") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<NeighborSet> sets;
    std::vector<std::set<std::string>> raw;
    for (int s = 0; s < 3; ++s) {
      std::set<std::string> words;
      while (words.size() < 50) words.insert("t" + std::to_string(rng.next_below(200)));
      raw.emplace_back(words);
      sets.push_back(
          neighbor_set("seed" + std::to_string(s), {words.begin(), words.end()}));
    }
    std::set<std::string> oracle = raw[0];
    for (int s = 1; s < 3; ++s) {
      std::set<std::string> next;
      std::set_intersection(oracle.begin(), oracle.end(), raw[s].begin(), raw[s].end(),
                            std::inserter(next, next.begin()));
      oracle = std::move(next);
    }
    CHECK(intersect(sets) == std::vector<std::string>(oracle.begin(), oracle.end()));
  }
}

TEST_CASE("support_count sums binomial coefficients") {
  CHECK(support_count(2, 2, 10) == 1);
  CHECK(support_count(4, 2, 10) == 11);  // C(4,2)+C(4,3)+C(4,4)

  // Independent Pascal-triangle oracle.
  const auto pascal = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::uint64_t>> tri(n + 1);
    for (std::size_t row = 0; row <= n; ++row) {
      tri[row].assign(row + 1, 1);
      for (std::size_t c = 1; c < row; ++c) tri[row][c] = tri[row - 1][c - 1] + tri[row - 1][c];
    }
    return k <= n ? tri[n][k] : 0;
  };
  for (const std::size_t support : {2u, 3u, 7u, 12u, 17u}) {
    std::uint64_t expected = 0;
    for (std::size_t s = 2; s <= std::min<std::size_t>(10, support); ++s)
      expected += pascal(support, s);
    CHECK(support_count(support, 2, 10) == expected);
  }
  CHECK(support_count(12, 2, 10) == 4070);
}

TEST_CASE("expand keeps words supported by at least subset_min seeds") {
  // Hand construction: a appears near x,y; b near x,z; c near x.
  // Realized geometrically: x close to all seeds, y only to a, z only to b.
  std::vector<std::string> words = {"a", "b", "c", "x", "y", "z"};
  std::vector<std::vector<double>> rows = {
      {1.0, 0.0, 0.0, 0.05},   // a
      {0.0, 1.0, 0.0, 0.05},   // b
      {0.0, 0.0, 1.0, 0.05},   // c
      {0.4, 0.4, 0.4, 0.0},    // x: near a, b and c
      {0.9, -0.4, -0.4, 0.0},  // y: near a only
      {-0.4, 0.9, -0.4, 0.0},  // z: near b only
  };
  const VectorIndex index = VectorIndex::build(words, rows);

  RelationSpec spec;
  spec.relation = Relation::CAUSE;
  spec.language = Language::EN;
  spec.seeds = {"a", "b", "c"};

  const CandidateSet result = expand(spec, index, /*k=*/2, 2, 3);
  REQUIRE(result.candidates.size() == 1);
  CHECK(result.candidates[0].word == "x");
  CHECK(result.candidates[0].supporting_seeds ==
        std::vector<std::string>{"a", "b", "c"});
  CHECK(result.candidates[0].max_subset_size == 3);
  CHECK(result.missing_seeds.empty());
}

TEST_CASE("identical neighborhoods expand to the shared set minus the seeds") {
  // Two tight clusters; seeds a,b sit in one of them.
  std::vector<std::string> words = {"a", "b", "u", "v", "w", "far1", "far2"};
  std::vector<std::vector<double>> rows = {
      {1.0, 0.01, 0}, {1.0, -0.01, 0}, {1.0, 0.02, 0}, {1.0, -0.02, 0}, {1.0, 0.0, 0.01},
      {-1.0, 0.1, 0}, {-1.0, -0.1, 0},
  };
  const VectorIndex index = VectorIndex::build(words, rows);
  RelationSpec spec;
  spec.seeds = {"a", "b"};
  const CandidateSet result = expand(spec, index, /*k=*/4, 2, 10);
  std::vector<std::string> got = result.words();
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"u", "v", "w"});
  for (const auto& c : result.candidates)
    CHECK(c.supporting_seeds == std::vector<std::string>{"a", "b"});
}

TEST_CASE("expand reports missing seeds and fails below two resolvable") {
  std::vector<std::string> words = {"a", "b", "x"};
  std::vector<std::vector<double>> rows = {{1, 0}, {0.9, 0.1}, {0.8, 0.2}};
  const VectorIndex index = VectorIndex::build(words, rows);

  RelationSpec spec;
  spec.seeds = {"a", "b", "ghost"};
  const CandidateSet ok = expand(spec, index, 2, 2, 10);
  CHECK(ok.missing_seeds == std::vector<std::string>{"ghost"});

  RelationSpec bad;
  bad.seeds = {"a", "ghost", "phantom"};
  CHECK_THROWS_AS(expand(bad, index, 2, 2, 10), DataError);
}

TEST_CASE("expand equals explicit subset enumeration on random fixtures") {
  Rng rng(777);
  int fixtures = 0;
  while (fixtures < 100) {
    const std::size_t n_seeds = 3 + rng.next_below(6);      // 3..8
    const std::size_t k = 10 + rng.next_below(21);          // 10..30
    const std::size_t vocab_extra = 40 + rng.next_below(20);
    const int dim = 12;

    // Random vector soup; seeds are ordinary members of it.
    std::vector<std::string> words;
    std::vector<std::string> seeds;
    for (std::size_t s = 0; s < n_seeds; ++s) {
      seeds.push_back("seed" + std::to_string(s));
      words.push_back(seeds.back());
    }
    for (std::size_t i = 0; i < vocab_extra; ++i) words.push_back("w" + std::to_string(i));

    std::vector<std::vector<double>> rows(words.size(), std::vector<double>(dim));
    for (auto& row : rows)
      for (auto& x : row) x = rng.next_range(-1.0, 1.0);
    const VectorIndex index = VectorIndex::build(words, rows);

    RelationSpec spec;
    spec.seeds = seeds;
    const CandidateSet result = expand(spec, index, k, 2, 10);

    std::map<std::string, std::set<std::string>> neighbors_by_seed;
    for (const auto& seed : seeds) {
      std::set<std::string> neighbor_words;
      for (const auto& [w, c] : index.nearest(seed, k).neighbors) neighbor_words.insert(w);
      neighbors_by_seed[seed] = std::move(neighbor_words);
    }
    const auto oracle =
        enumeration_oracle(neighbors_by_seed, seeds, 2, 10,
                           {seeds.begin(), seeds.end()});

    REQUIRE(result.candidates.size() == oracle.size());
    for (const auto& candidate : result.candidates) {
      const auto it = oracle.find(candidate.word);
      REQUIRE(it != oracle.end());
      CHECK(std::set<std::string>(candidate.supporting_seeds.begin(),
                                  candidate.supporting_seeds.end()) == it->second);
    }
    ++fixtures;
  }
  CHECK(fixtures == 100);
}

TEST_CASE("downward closure: supporting seeds contain every smaller subset") {
  // If a word intersects the neighbor sets of S, every seed of S supports it;
  // equivalently its support set contains each subset of S. Spot-check via the
  // candidate invariants on a random fixture.
  Rng rng(31337);
  std::vector<std::string> words;
  std::vector<std::string> seeds = {"s0", "s1", "s2", "s3"};
  words = seeds;
  for (int i = 0; i < 30; ++i) words.push_back("w" + std::to_string(i));
  std::vector<std::vector<double>> rows(words.size(), std::vector<double>(8));
  for (auto& row : rows)
    for (auto& x : row) x = rng.next_range(-1.0, 1.0);
  const VectorIndex index = VectorIndex::build(words, rows);

  RelationSpec spec;
  spec.seeds = seeds;
  const CandidateSet result = expand(spec, index, 12, 2, 10);
  for (const auto& candidate : result.candidates) {
    CHECK(candidate.supporting_seeds.size() >= 2);
    // every supporting seed really has the word in its neighbor set
    for (const auto& seed : candidate.supporting_seeds) {
      bool found = false;
      for (const auto& [w, c] : index.nearest(seed, 12).neighbors)
        if (w == candidate.word) found = true;
      CHECK(found);
    }
    // and no seed is ever a candidate
    CHECK(std::find(seeds.begin(), seeds.end(), candidate.word) == seeds.end());
  }
}

TEST_CASE("ranking is deterministic: support desc, cosine desc, word asc") {
  Rng rng(99);
  std::vector<std::string> words = {"s0", "s1", "s2"};
  for (int i = 0; i < 25; ++i) words.push_back("w" + std::to_string(i));
  std::vector<std::vector<double>> rows(words.size(), std::vector<double>(6));
  for (auto& row : rows)
    for (auto& x : row) x = rng.next_range(-1.0, 1.0);
  const VectorIndex index = VectorIndex::build(words, rows);

  RelationSpec spec;
  spec.seeds = {"s0", "s1", "s2"};
  const CandidateSet a = expand(spec, index, 10, 2, 10);
  const CandidateSet b = expand(spec, index, 10, 2, 10);
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i)
    CHECK(a.candidates[i].word == b.candidates[i].word);
  for (std::size_t i = 1; i < a.candidates.size(); ++i) {
    const auto& prev = a.candidates[i - 1];
    const auto& cur = a.candidates[i];
    const bool ordered =
        prev.supporting_seeds.size() > cur.supporting_seeds.size() ||
        (prev.supporting_seeds.size() == cur.supporting_seeds.size() &&
         (prev.best_cosine > cur.best_cosine ||
          (prev.best_cosine == cur.best_cosine && prev.word < cur.word)));
    CHECK(ordered);
  }
}

TEST_CASE("seed file fixture loads all ten relation lists") {
  const auto specs = load_relation_specs(test::fixture_path("seeds_termframe.json"));
  CHECK(specs.size() == 10);
  const RelationSpec& cause_en = find_spec(specs, Relation::CAUSE, Language::EN);
  CHECK(cause_en.seeds.size() == 11);
  CHECK(cause_en.seeds.front() == "allogenic");
  const RelationSpec& form_hr = find_spec(specs, Relation::FORM, Language::HR);
  CHECK(std::find(form_hr.seeds.begin(), form_hr.seeds.end(), "kavernožan") !=
        form_hr.seeds.end());
  CHECK_THROWS_AS(find_spec({}, Relation::CAUSE, Language::EN), LookupError);
}

TEST_CASE("candidate sets round-trip through JSON") {
  test::TempDir dir("candjson");
  CandidateSet set;
  set.spec.relation = Relation::FORM;
  set.spec.language = Language::HR;
  set.spec.seeds = {"mrežast", "kružan"};
  set.k = 50;
  set.missing_seeds = {"ghost"};
  Candidate c;
  c.word = "zvjezdast";
  c.supporting_seeds = {"kružan", "mrežast"};
  c.max_subset_size = 2;
  c.best_cosine = 0.875;
  set.candidates.push_back(c);

  const auto path = dir.path("candidates.json");
  save_candidate_set(set, path);
  const CandidateSet loaded = load_candidate_set(path);
  CHECK(loaded.spec.relation == Relation::FORM);
  CHECK(loaded.spec.language == Language::HR);
  CHECK(loaded.k == 50);
  CHECK(loaded.missing_seeds == set.missing_seeds);
  REQUIRE(loaded.candidates.size() == 1);
  CHECK(loaded.candidates[0].word == "zvjezdast");
  CHECK(loaded.candidates[0].supporting_seeds == c.supporting_seeds);
  CHECK(loaded.candidates[0].best_cosine == doctest::Approx(0.875));
}

}  // TEST_SUITE
