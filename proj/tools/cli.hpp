#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "depseq/chain.hpp"
#include "depseq/generation.hpp"
#include "depseq/noise.hpp"

namespace depseq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidArguments = 2,
  kGenerationFailure = 3,
  kInputExhausted = 4,
};

struct SamplerFlags {
  long long min;
  long long max;
  double skew = 0.0;
};

struct GenFlags {
  SamplerFlags states{1, 6};
  SamplerFlags alphabet{1, 8};
  SamplerFlags transitions{1, 4};
  std::string symbol_prefix = "q_";
  bool verbose = false;
  // transducer only
  std::string input_alphabet;
  std::string input_from;
  double ratio_i_o = 0.3;
};

struct NoiseFlags {
  std::string word;
  std::string file;
  std::string alphabet;
  double noise_level = 0.1;
  std::optional<long long> n_change;
  double prob_insert = 0.5;
};

/// Everything the command line can set, with defaults matching the library.
struct Options {
  std::string command;  // "gen producer", "word", "noise replace", ...
  std::optional<std::uint64_t> seed;
  std::string out;

  GenFlags producer;
  GenFlags transducer = [] {
    GenFlags f;
    f.transitions = {1, 1};
    f.symbol_prefix.clear();
    return f;
  }();

  std::string automaton;
  long long length = 10;
  std::string input;
  std::string input_file;
  bool return_order = false;

  NoiseFlags noise;

  std::optional<long long> nodes;
  std::string lengths;
  std::string regime;
  std::string config;
  std::string csv;

  std::string format = "dot";
};

/// Thrown for malformed command lines; carries the exit code CLI11 chose.
struct UsageError {
  int code;
  std::string message;
};

Options parse(const std::vector<std::string>& args);

ProducerParams producer_params(const Options& options);
TransducerParams transducer_params(const Options& options, Alphabet input_alphabet);
NoiseSpec noise_spec(const Options& options, NoiseKind kind, std::size_t word_length);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace depseq::cli
