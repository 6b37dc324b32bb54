#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "depseq/io.hpp"
#include "fixtures.hpp"

using namespace depseq;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("depseq_cli_" + name)).string();
}

}  // namespace

TEST_CASE("command line defaults") {
  const cli::Options o = cli::parse({"gen", "producer"});
  const ProducerParams p = cli::producer_params(o);
  struct Row {
    const char* name;
    SamplerSpec actual;
    int min, max;
  };
  for (const auto& row : {Row{"states", p.states, 1, 6}, Row{"alphabet", p.alphabet, 1, 8},
                          Row{"transitions", p.transitions, 1, 4}}) {
    CAPTURE(row.name);
    CHECK(row.actual.min == row.min);
    CHECK(row.actual.max == row.max);
    CHECK(row.actual.skewness == 0.0);
  }
  CHECK(p.symbol_prefix == "q_");
  CHECK_FALSE(p.verbose);

  const TransducerParams t = cli::transducer_params(cli::parse({"gen", "transducer"}), {});
  CHECK(t.ratio_i_o == 0.3);
  CHECK(t.states.min == 1);
  CHECK(t.states.max == 6);
  CHECK(t.alphabet.min == 1);
  CHECK(t.alphabet.max == 8);
  CHECK(t.transitions.min == 1);
  CHECK(t.transitions.max == 1);

  CHECK(cli::parse({"word", "--automaton", "p.json"}).length == 10);
  const NoiseSpec n = cli::noise_spec(cli::parse({"noise", "insdel", "--word", "ab"}),
                                      NoiseKind::InsertOrDelete, 2);
  CHECK(n.noise_level == 0.1);
  CHECK(n.prob_insert == 0.5);
  CHECK_FALSE(n.n_symbols_change.has_value());
}

TEST_CASE("command line matches library defaults") {
  const ProducerParams lib_p;
  CHECK(cli::producer_params(cli::parse({"gen", "producer"})) == lib_p);
  const TransducerParams lib_t;
  CHECK(cli::transducer_params(cli::parse({"gen", "transducer"}), {}) == lib_t);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"gen", "producer", "--seed", "1"}).code == 0);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"gen", "producer", "--bogus"}).code == 2);
  CHECK(run_cli({"gen", "producer", "--seed", "1", "--min-states", "0"}).code == 2);
  CHECK(run_cli({"gen", "producer", "--seed", "1", "--max-states", "51"}).code == 2);
  CHECK(run_cli({"gen", "producer", "--seed", "1", "--min-states", "4", "--max-states", "3"}).code == 2);
  CHECK(run_cli({"gen", "transducer", "--seed", "1"}).code == 2);
  CHECK(run_cli({"word", "--automaton", scratch("missing.json")}).code == 2);
  CHECK(run_cli({"noise", "replace", "--word", "aa", "--seed", "1", "--n-change", "1"}).code == 2);

  const std::string bad = scratch("bad.json");
  write_text_file(bad, "{\"format_version\": 1");
  CHECK(run_cli({"render", "--automaton", bad}).code == 3);
  std::filesystem::remove(bad);

  // The transducer reads one symbol per output, so a 2-symbol input cannot give 5 outputs.
  const std::string t = scratch("t.json");
  write_text_file(t, serialize_automaton(testing::two_state_transducer()));
  const auto short_input = run_cli({"transduce", "--automaton", t, "--input", "ab", "--length", "5", "--seed", "1"});
  CHECK(short_input.code == 4);
  CHECK(short_input.err.find("shortfall") != std::string::npos);
  const auto ok = run_cli({"transduce", "--automaton", t, "--input", "ab", "--length", "3",
                           "--seed", "1", "--return-order"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "zzz\nzazbz\n");
  std::filesystem::remove(t);
}

TEST_CASE("seeded commands are deterministic") {
  const std::string p = scratch("p.json");
  REQUIRE(run_cli({"gen", "producer", "--seed", "42", "--out", p}).code == 0);
  const auto a = run_cli({"word", "--automaton", p, "--length", "30", "--seed", "7"});
  const auto b = run_cli({"word", "--automaton", p, "--length", "30", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err.empty());
  std::filesystem::remove(p);

  const auto c1 = run_cli({"chain", "--nodes", "3", "--lengths", "20,15,10", "--regime", "clean", "--seed", "3"});
  const auto c2 = run_cli({"chain", "--nodes", "3", "--lengths", "20,15,10", "--regime", "clean", "--seed", "3"});
  CHECK(c1.code == 0);
  CHECK(c1.out == c2.out);

  const auto unseeded = run_cli({"gen", "producer"});
  CHECK(unseeded.code == 0);
  CHECK(unseeded.err.starts_with("seed: "));
}

TEST_CASE("chain command writes dataset and edges") {
  const std::string out = scratch("chain.json");
  const std::string csv = scratch("chain.csv");
  const auto r = run_cli({"chain", "--nodes", "3", "--lengths", "30,20,10", "--regime", "clean",
                          "--seed", "11", "--out", out, "--csv", csv});
  CHECK(r.code == 0);
  CHECK(r.out == "X1 -> X2\nX2 -> X3\n");
  const ChainDataset d = read_dataset(out);
  CHECK(d.nodes.size() == 3);
  CHECK(d.seed == 11);
  CHECK(read_text_file(csv).starts_with("node_id,position,symbol\n"));
  std::filesystem::remove(out);
  std::filesystem::remove(csv);

  CHECK(run_cli({"chain", "--nodes", "3", "--lengths", "30,20", "--seed", "1"}).code == 2);
  CHECK(run_cli({"chain", "--regime", "loud", "--seed", "1"}).code == 2);
}
