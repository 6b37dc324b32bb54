#include <doctest.h>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "depseq/generation.hpp"
#include "fixtures.hpp"

using namespace depseq;
using namespace depseq::testing;

namespace {

ProducerParams producer_params(int smin, int smax, int amin, int amax, int tmin, int tmax) {
  ProducerParams p;
  p.states = {.min = smin, .max = smax};
  p.alphabet = {.min = amin, .max = amax};
  p.transitions = {.min = tmin, .max = tmax};
  return p;
}

// Labels per state, ignoring targets.
std::vector<std::vector<Symbol>> labels(const std::vector<TransitionMap>& rows) {
  std::vector<std::vector<Symbol>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const auto& [symbol, target] : row) out.back().push_back(symbol);
  }
  return out;
}

// Receptive transducer with random targets; cycles and unreachable states allowed.
Transducer raw_receptive_transducer(Rng& rng, std::size_t n) {
  Transducer t;
  t.input_alphabet = parse_alphabet("ab");
  t.output_alphabet = parse_alphabet("xy");
  t.deterministic = false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool input = i > 0 && rng.bernoulli(0.6);
    t.kinds.push_back(input ? StateKind::Input : StateKind::Output);
    t.states.push_back((input ? "i" : "o") + std::to_string(i));
  }
  t.transitions.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (t.kinds[s] == StateKind::Input) {
      for (const auto& sym : t.input_alphabet) t.transitions[s][sym] = rng.uniform_index(n);
    } else {
      t.transitions[s][Symbol('x')] = rng.uniform_index(n);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("forced one-state producer") {
  Rng rng(1);
  const auto p = generate_random_producer(producer_params(1, 1, 1, 1, 1, 1), rng);
  REQUIRE(p.size() == 1);
  REQUIRE(p.alphabet.size() == 1);
  CHECK(p.states[0] == "q_0");
  CHECK(p.transitions[0] == TransitionMap{{*p.alphabet.begin(), 0}});
  CHECK(p.initial == 0);
}

TEST_CASE("producer respects structural bounds") {
  // minStates=4, maxStates=6, minAlphabet=3, maxAlphabet=10, transitions 1..4
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto p = generate_random_producer(producer_params(4, 6, 3, 10, 1, 4), rng);
    CHECK(validate_producer(p).empty());
    CHECK((p.size() >= 4 && p.size() <= 6));
    CHECK((p.alphabet.size() >= 3 && p.alphabet.size() <= 10));
    for (const auto& s : p.alphabet) {
      CHECK(s.token().size() == 1);
      CHECK((s.token()[0] >= 'a' && s.token()[0] <= 'z'));
    }
    for (const auto& row : p.transitions) {
      CHECK(row.size() >= 1);
      CHECK(row.size() <= std::min<std::size_t>(4, p.alphabet.size()));
    }
  }
}

TEST_CASE("default producers are always valid") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    REQUIRE(validate_producer(generate_random_producer(ProducerParams{}, rng)).empty());
  }
}

TEST_CASE("producer generation is seed-stable and verbose is side-effect free") {
  ProducerParams params = producer_params(3, 20, 2, 12, 1, 5);
  Rng a(77), b(77);
  const auto first = generate_random_producer(params, a);
  params.verbose = true;
  std::ostringstream sink;
  auto* old = std::clog.rdbuf(sink.rdbuf());
  const auto second = generate_random_producer(params, b);
  std::clog.rdbuf(old);
  CHECK(first == second);
  CHECK(sink.str().find("producer:") != std::string::npos);
}

TEST_CASE("transition bounds are re-clamped to the drawn alphabet") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto p = generate_random_producer(producer_params(2, 8, 1, 26, 3, 20), rng);
    const std::size_t m = p.alphabet.size();
    for (const auto& row : p.transitions) {
      CHECK(row.size() >= std::min<std::size_t>(3, m));
      CHECK(row.size() <= std::min<std::size_t>(20, m));
    }
  }
}

TEST_CASE("forced one-state transducer") {
  TransducerParams params;
  params.read_input_alphabet = parse_alphabet("a");
  params.ratio_i_o = 0.0;
  params.states = {.min = 1, .max = 1};
  params.alphabet = {.min = 1, .max = 1};
  Rng rng(3);
  const auto t = generate_random_transducer(params, rng);
  REQUIRE(t.size() == 1);
  CHECK(t.kinds[0] == StateKind::Output);
  CHECK(t.states[0] == "o_0");
  REQUIRE(t.output_alphabet.size() == 1);
  CHECK_FALSE(t.output_alphabet.contains(Symbol('a')));
  CHECK(t.transitions[0] == TransitionMap{{*t.output_alphabet.begin(), 0}});
  CHECK(t.deterministic);
}

TEST_CASE("deterministic transducer over a producer alphabet") {
  // minStates=4, maxStates=10, minAlphabet=3, maxAlphabet=10, transitions 1..1, ratio 0.3
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto p = generate_random_producer(producer_params(4, 6, 3, 10, 1, 4), rng);
    TransducerParams params;
    params.read_input_alphabet = p.alphabet;
    params.states = {.min = 4, .max = 10};
    params.alphabet = {.min = 3, .max = 10};
    params.transitions = {.min = 1, .max = 1};
    params.ratio_i_o = 0.3;
    const auto t = generate_random_transducer(params, rng);
    CHECK(validate_transducer(t).empty());
    CHECK(t.input_alphabet == p.alphabet);
    CHECK(t.deterministic);
    CHECK(is_deterministic(t));
    CHECK((t.size() >= 4 && t.size() <= 10));
    CHECK((t.output_alphabet.size() >= 3 && t.output_alphabet.size() <= 10));
    for (const auto& s : t.output_alphabet) CHECK_FALSE(p.alphabet.contains(s));
    CHECK(t.input_states().size() >= 1);
  }
}

TEST_CASE("default transducers are always valid") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    TransducerParams params;
    params.read_input_alphabet = parse_alphabet("abcde");
    REQUIRE(validate_transducer(generate_random_transducer(params, rng)).empty());
  }
}

TEST_CASE("nondeterministic transducers carry distinct output labels") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    TransducerParams params;
    params.read_input_alphabet = parse_alphabet("abc");
    params.states = {.min = 2, .max = 12};
    params.transitions = {.min = 1, .max = 4};
    const auto t = generate_random_transducer(params, rng);
    CHECK(validate_transducer(t).empty());
    for (auto s : t.output_states()) {
      CHECK(t.transitions[s].size() <= std::min<std::size_t>(4, t.output_alphabet.size()));
    }
    for (auto s : t.input_states()) CHECK(t.transitions[s].size() == 3);
  }
}

TEST_CASE("input-state ratio is approximately honoured") {
  TransducerParams params;
  params.read_input_alphabet = parse_alphabet("abc");
  params.states = {.min = 20, .max = 20};
  params.ratio_i_o = 0.3;
  double total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const auto t = generate_random_transducer(params, rng);
    REQUIRE(t.output_states().size() >= 1);
    REQUIRE(t.input_states().size() >= 1);
    total += static_cast<double>(t.input_states().size()) / 20.0;
  }
  const double mean = total / 1000;
  CHECK(mean >= 0.25);
  CHECK(mean <= 0.35);
}

TEST_CASE("extreme ratios") {
  TransducerParams params;
  params.read_input_alphabet = parse_alphabet("ab");
  params.states = {.min = 5, .max = 5};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    params.ratio_i_o = 1.0;
    auto t = generate_random_transducer(params, rng);
    CHECK(t.output_states().size() == 1);
    params.ratio_i_o = 0.0;
    t = generate_random_transducer(params, rng);
    CHECK(t.input_states().empty());
  }
}

TEST_CASE("output alphabet falls back to uppercase") {
  TransducerParams params;
  params.read_input_alphabet = parse_alphabet("abcdefghijklmnopqrstuvwxyz");
  params.alphabet = {.min = 5, .max = 5};
  Rng rng(1);
  const auto t = generate_random_transducer(params, rng);
  for (const auto& s : t.output_alphabet) CHECK(std::isupper(static_cast<unsigned char>(s.token()[0])));

  params.read_input_alphabet = parse_alphabet("abcdefghijklmnopqrstuvwxy");
  const auto mixed = generate_random_transducer(params, rng);
  CHECK(mixed.output_alphabet.contains(Symbol('z')));
  CHECK(mixed.output_alphabet.size() == 5);

  params.read_input_alphabet =
      parse_alphabet("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ");
  CHECK_THROWS_AS(generate_random_transducer(params, rng), AlphabetExhausted);
}

TEST_CASE("transducer generation is seed-stable") {
  TransducerParams params;
  params.read_input_alphabet = parse_alphabet("pq");
  params.states = {.min = 3, .max = 30};
  Rng a(5), b(5);
  CHECK(generate_random_transducer(params, a) == generate_random_transducer(params, b));
}

TEST_CASE("repair_reachability") {
  Rng rng(0);
  const auto fine = two_state_transducer();
  CHECK(repair_reachability(fine, rng) == fine);

  const auto split = make_producer({"q0", "q1"}, "a", {{"q0", 'a', "q0"}, {"q1", 'a', "q1"}});
  const auto repaired = repair_reachability(split, rng);
  CHECK(repaired.transitions[0] == TransitionMap{{Symbol('a'), 1}});
  CHECK(repaired.transitions[1] == TransitionMap{{Symbol('a'), 1}});

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng r(seed);
    const auto raw = raw_random_producer(r, 1 + r.uniform_index(12), "abcd");
    const auto fixed = repair_reachability(raw, r);
    CHECK(reachable_states(fixed).size() == fixed.size());
    CHECK(labels(fixed.transitions) == labels(raw.transitions));
  }

  Producer broken = split;
  broken.transitions[0].clear();
  CHECK_THROWS_AS(repair_reachability(broken, rng), RepairFailed);
}

TEST_CASE("break_input_only_cycles") {
  Rng rng(0);
  const auto fine = two_state_transducer();
  CHECK(break_input_only_cycles(fine, rng) == fine);

  const auto loop = make_transducer({"o0", "i0"}, "a", "z", {{"o0", 'z', "i0"}, {"i0", 'a', "i0"}});
  const auto fixed = break_input_only_cycles(loop, rng);
  CHECK(fixed.transitions[1] == TransitionMap{{Symbol('a'), 0}});

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng r(seed);
    auto raw = raw_receptive_transducer(r, 1 + r.uniform_index(10));
    raw = repair_reachability(raw, r);
    const auto out = break_input_only_cycles(raw, r);
    CHECK_FALSE(find_input_only_cycle(out));
    CHECK(labels(out.transitions) == labels(raw.transitions));
    CHECK(reachable_states(out).size() == out.size());
    CHECK(validate_transducer(out).empty());
  }
}

TEST_CASE("out-of-range generator parameters") {
  struct Case {
    const char* name;
    ProducerParams params;
  };
  auto with = [](auto mutate) {
    ProducerParams p;
    mutate(p);
    return p;
  };
  const std::vector<Case> cases = {
      {"min_states 0", with([](auto& p) { p.states.min = 0; })},
      {"min_states 31", with([](auto& p) { p.states = {.min = 31, .max = 40}; })},
      {"max_states < min", with([](auto& p) { p.states = {.min = 5, .max = 4}; })},
      {"max_states 51", with([](auto& p) { p.states.max = 51; })},
      {"min_alphabet 0", with([](auto& p) { p.alphabet.min = 0; })},
      {"min_alphabet 27", with([](auto& p) { p.alphabet = {.min = 27, .max = 27}; })},
      {"max_alphabet < min", with([](auto& p) { p.alphabet = {.min = 5, .max = 4}; })},
      {"max_alphabet 27", with([](auto& p) { p.alphabet.max = 27; })},
      {"min_transitions 0", with([](auto& p) { p.transitions.min = 0; })},
      {"min_transitions > max_alphabet", with([](auto& p) { p.transitions = {.min = 9, .max = 9}; })},
      {"max_transitions 0", with([](auto& p) { p.transitions = {.min = 1, .max = 0}; })},
      {"max_transitions > max_alphabet", with([](auto& p) { p.transitions.max = 9; })},
      {"min_transitions > max_transitions", with([](auto& p) { p.transitions = {.min = 3, .max = 2}; })},
      {"skew NaN", with([](auto& p) { p.alphabet.skewness = NAN; })},
      {"empty prefix", with([](auto& p) { p.symbol_prefix.clear(); })},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    Rng rng(0);
    CHECK_THROWS_AS(generate_random_producer(c.params, rng), InvalidParams);
  }

  TransducerParams t;
  Rng rng(0);
  CHECK_THROWS_AS(generate_random_transducer(t, rng), InvalidParams);  // empty input alphabet
  t.read_input_alphabet = parse_alphabet("a");
  t.ratio_i_o = 1.5;
  CHECK_THROWS_AS(generate_random_transducer(t, rng), InvalidParams);
  t.ratio_i_o = -0.1;
  CHECK_THROWS_AS(generate_random_transducer(t, rng), InvalidParams);
  t.ratio_i_o = 1.0;
  CHECK_NOTHROW(generate_random_transducer(t, rng));
}
