#include "cli.hpp"

#include <algorithm>
#include <climits>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "depseq/io.hpp"
#include "depseq/word_engine.hpp"

namespace depseq::cli {
namespace {

void add_common(CLI::App* sub, Options& o, std::uint64_t& seed_value) {
  sub->add_option("--seed", seed_value, "Root random seed (drawn from system entropy if absent)");
  sub->add_option("--out", o.out, "Write the result to this path instead of stdout");
}

void add_generator_flags(CLI::App* sub, GenFlags& f) {
  sub->add_option("--min-states", f.states.min, "Minimum number of states")->capture_default_str();
  sub->add_option("--max-states", f.states.max, "Maximum number of states")->capture_default_str();
  sub->add_option("--skw-states", f.states.skew, "Skewness of the state-count distribution")
      ->capture_default_str();
  sub->add_option("--min-alphabet", f.alphabet.min, "Minimum alphabet size")->capture_default_str();
  sub->add_option("--max-alphabet", f.alphabet.max, "Maximum alphabet size")->capture_default_str();
  sub->add_option("--skw-alphabet", f.alphabet.skew, "Skewness of the alphabet-size distribution")
      ->capture_default_str();
  sub->add_option("--min-transitions", f.transitions.min, "Minimum outgoing transitions per state")
      ->capture_default_str();
  sub->add_option("--max-transitions", f.transitions.max, "Maximum outgoing transitions per state")
      ->capture_default_str();
  sub->add_option("--skw-transitions", f.transitions.skew,
                  "Skewness of the out-degree distribution")
      ->capture_default_str();
  sub->add_option("--symbol-prefix", f.symbol_prefix, "Prefix for generated state names")
      ->capture_default_str();
  sub->add_flag("--verbose", f.verbose, "Log generation details to stderr");
}

void add_noise_flags(CLI::App* sub, NoiseFlags& f, bool with_insert) {
  sub->add_option("--word", f.word, "Word to corrupt");
  sub->add_option("--file", f.file, "Read the word from this file");
  sub->add_option("--alphabet", f.alphabet, "Noise alphabet (inferred from the word if absent)");
  sub->add_option("--noise-level", f.noise_level, "Fraction of the word length to alter")
      ->capture_default_str();
  sub->add_option("--n-change", f.n_change, "Exact number of operations (overrides --noise-level)");
  if (with_insert) {
    sub->add_option("--prob-insert", f.prob_insert, "Probability that an operation inserts")
        ->capture_default_str();
  }
}

int to_int(long long value, const char* name) {
  if (value < INT_MIN || value > INT_MAX) {
    throw InvalidParams(std::string(name) + " = " + std::to_string(value) + " is out of range");
  }
  return static_cast<int>(value);
}

SamplerSpec sampler(const SamplerFlags& f, const char* what) {
  SamplerSpec spec;
  spec.min = to_int(f.min, what);
  spec.max = to_int(f.max, what);
  spec.skewness = f.skew;
  return spec;
}

std::string trim(std::string text) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  text.erase(std::find_if(text.rbegin(), text.rend(), not_space).base(), text.end());
  text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
  return text;
}

std::size_t checked_length(long long length) {
  if (length < 1) throw InvalidLength("--length must be at least 1, got " + std::to_string(length));
  return static_cast<std::size_t>(length);
}

Automaton load_automaton(const std::string& path) {
  if (path.empty()) throw InvalidParams("--automaton is required");
  return parse_automaton(read_text_file(path));
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

Rng seeded(const Options& o, std::ostream& err) {
  if (o.seed) return Rng(*o.seed);
  const std::uint64_t seed = Rng::entropy_seed();
  err << "seed: " << seed << '\n';
  return Rng(seed);
}

Word read_word_arg(const std::string& inline_word, const std::string& file) {
  if (!inline_word.empty() && !file.empty()) throw InvalidParams("give either a word or a file, not both");
  return parse_word(trim(file.empty() ? inline_word : read_text_file(file)));
}

int cmd_gen_producer(const Options& o, std::ostream& out, std::ostream& err) {
  Rng rng = seeded(o, err);
  emit(o, out, serialize_automaton(generate_random_producer(producer_params(o), rng)));
  return kSuccess;
}

int cmd_gen_transducer(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& f = o.transducer;
  Alphabet input;
  if (!f.input_alphabet.empty() && !f.input_from.empty()) {
    throw InvalidParams("give either --input-alphabet or --input-from, not both");
  }
  if (!f.input_alphabet.empty()) {
    input = parse_alphabet(f.input_alphabet);
  } else if (!f.input_from.empty()) {
    const Automaton upstream = parse_automaton(read_text_file(f.input_from));
    input = std::holds_alternative<Producer>(upstream)
                ? std::get<Producer>(upstream).alphabet
                : std::get<Transducer>(upstream).output_alphabet;
  } else {
    throw InvalidParams("--input-alphabet or --input-from is required");
  }
  Rng rng = seeded(o, err);
  emit(o, out, serialize_automaton(generate_random_transducer(transducer_params(o, input), rng)));
  return kSuccess;
}

int cmd_word(const Options& o, std::ostream& out, std::ostream& err) {
  const std::size_t length = checked_length(o.length);
  const Automaton a = load_automaton(o.automaton);
  if (!std::holds_alternative<Producer>(a)) throw InvalidParams("word needs a producer automaton");
  Rng rng = seeded(o, err);
  emit(o, out, format_word(random_word_from_producer(std::get<Producer>(a), length, rng)) + "\n");
  return kSuccess;
}

int cmd_transduce(const Options& o, std::ostream& out, std::ostream& err) {
  const std::size_t length = checked_length(o.length);
  const Automaton a = load_automaton(o.automaton);
  if (!std::holds_alternative<Transducer>(a)) throw InvalidParams("transduce needs a transducer automaton");
  const Word input = read_word_arg(o.input, o.input_file);
  Rng rng = seeded(o, err);
  const auto result =
      random_word_from_transducer(std::get<Transducer>(a), input, length, o.return_order, rng);
  std::string text = format_word(result.output) + "\n";
  if (result.interleaving) text += format_word(result.interleaving->word()) + "\n";
  emit(o, out, text);
  return kSuccess;
}

int cmd_noise(const Options& o, NoiseKind kind, std::ostream& out, std::ostream& err) {
  const Word word = read_word_arg(o.noise.word, o.noise.file);
  NoiseSpec spec = noise_spec(o, kind, word.size());
  // Convenience mode; chain pipelines always pass the generating alphabet.
  if (spec.alphabet.empty()) spec.alphabet = infer_alphabet(word);
  Rng rng = seeded(o, err);
  const Word noisy = kind == NoiseKind::InsertOrDelete
                         ? introduce_insert_or_delete_noise(word, spec, rng)
                         : introduce_replacement_noise(word, spec, rng);
  emit(o, out, format_word(noisy) + "\n");
  return kSuccess;
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidParams("cannot parse length '" + item + "'");
    }
    if (value < 1) throw InvalidParams("every node length must be at least 1");
    out.push_back(static_cast<std::size_t>(value));
  }
  return out;
}

int cmd_chain(const Options& o, std::ostream& out, std::ostream& err) {
  ChainSpec spec;
  bool config_seed = false;
  if (!o.config.empty()) {
    const std::string text = read_text_file(o.config);
    spec = chain_spec_from_json(text);
    const auto doc = nlohmann::json::parse(text);
    config_seed = doc.contains("seed");
  }
  if (o.nodes) {
    if (*o.nodes < 1) throw InvalidParams("--nodes must be at least 1");
    spec.n_nodes = static_cast<std::size_t>(*o.nodes);
  }
  if (!o.lengths.empty()) spec.lengths = parse_lengths(o.lengths);
  if (spec.lengths.empty()) spec.lengths.assign(spec.n_nodes, 10);
  if (!o.regime.empty()) spec.regime = parse_regime(o.regime);
  if (o.seed) {
    spec.seed = *o.seed;
  } else if (!config_seed) {
    spec.seed = Rng::entropy_seed();
    err << "seed: " << spec.seed << '\n';
  }

  const Chain chain = build_chain(spec);
  const ChainDataset dataset = generate_dataset(chain, spec);
  if (!o.csv.empty()) write_dataset_csv(dataset, o.csv);
  if (o.out.empty()) {
    out << dataset_to_json(dataset);
  } else {
    write_dataset(dataset, o.out);
    for (const auto& [from, to] : dataset.edges) out << from << " -> " << to << '\n';
  }
  return kSuccess;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.format != "dot") throw InvalidParams("unsupported render format '" + o.format + "'");
  emit(o, out, to_dot(load_automaton(o.automaton)));
  return kSuccess;
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.command == "gen producer") return cmd_gen_producer(o, out, err);
  if (o.command == "gen transducer") return cmd_gen_transducer(o, out, err);
  if (o.command == "word") return cmd_word(o, out, err);
  if (o.command == "transduce") return cmd_transduce(o, out, err);
  if (o.command == "noise insdel") return cmd_noise(o, NoiseKind::InsertOrDelete, out, err);
  if (o.command == "noise replace") return cmd_noise(o, NoiseKind::Replacement, out, err);
  if (o.command == "chain") return cmd_chain(o, out, err);
  if (o.command == "render") return cmd_render(o, out);
  throw InvalidParams("unknown command '" + o.command + "'");
}

}  // namespace

Options parse(const std::vector<std::string>& args) {
  Options o;
  std::uint64_t seed_value = 0;

  CLI::App app{"Random producers, transducers and dependent event sequences", "depseq"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random automaton");
  gen->require_subcommand(1);
  auto* gen_producer = gen->add_subcommand("producer", "Generate a random producer");
  add_generator_flags(gen_producer, o.producer);
  add_common(gen_producer, o, seed_value);

  auto* gen_transducer = gen->add_subcommand("transducer", "Generate a random transducer");
  add_generator_flags(gen_transducer, o.transducer);
  gen_transducer->add_option("--input-alphabet", o.transducer.input_alphabet,
                             "Input symbols, e.g. abc or a,b,c");
  gen_transducer->add_option("--input-from", o.transducer.input_from,
                             "Read the input alphabet from an upstream automaton file");
  gen_transducer->add_option("--ratio-i-o", o.transducer.ratio_i_o,
                             "Approximate fraction of input states")
      ->capture_default_str();
  add_common(gen_transducer, o, seed_value);

  auto* word = app.add_subcommand("word", "Random word from a producer");
  word->add_option("--automaton", o.automaton, "Producer file")->required();
  word->add_option("--length", o.length, "Word length")->capture_default_str();
  add_common(word, o, seed_value);

  auto* transduce = app.add_subcommand("transduce", "Run a transducer on an input word");
  transduce->add_option("--automaton", o.automaton, "Transducer file")->required();
  transduce->add_option("--input", o.input, "Input word");
  transduce->add_option("--input-file", o.input_file, "Read the input word from a file");
  transduce->add_option("--length", o.length, "Output length")->capture_default_str();
  transduce->add_flag("--return-order", o.return_order, "Also print the interleaved run word");
  add_common(transduce, o, seed_value);

  auto* noise = app.add_subcommand("noise", "Inject noise into a word");
  noise->require_subcommand(1);
  auto* insdel = noise->add_subcommand("insdel", "Random insertions and deletions");
  add_noise_flags(insdel, o.noise, true);
  add_common(insdel, o, seed_value);
  auto* replace = noise->add_subcommand("replace", "Random substitutions");
  add_noise_flags(replace, o.noise, false);
  add_common(replace, o, seed_value);

  auto* chain = app.add_subcommand("chain", "Generate a chain dataset X1 -> ... -> Xn");
  chain->add_option("--nodes", o.nodes, "Number of nodes");
  chain->add_option("--lengths", o.lengths, "Comma-separated per-node lengths");
  chain->add_option("--regime", o.regime, "clean | observational | propagated");
  chain->add_option("--config", o.config, "Chain specification JSON");
  chain->add_option("--csv", o.csv, "Also write a flat CSV export");
  add_common(chain, o, seed_value);

  auto* render = app.add_subcommand("render", "Render an automaton");
  render->add_option("--automaton", o.automaton, "Automaton file")->required();
  render->add_option("--format", o.format, "Output format")->capture_default_str();
  add_common(render, o, seed_value);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError{kSuccess, app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError{kInvalidArguments, std::string(e.what()) + "\n"};
  }

  for (auto* leaf : {gen_producer, gen_transducer, word, transduce, insdel, replace, chain, render}) {
    if (!leaf->parsed()) continue;
    const auto* parent = leaf->get_parent();
    o.command = parent == &app ? leaf->get_name() : parent->get_name() + " " + leaf->get_name();
    if (leaf->count("--seed") > 0) o.seed = seed_value;
  }
  return o;
}

ProducerParams producer_params(const Options& o) {
  const auto& f = o.producer;
  ProducerParams p;
  p.states = sampler(f.states, "states");
  p.alphabet = sampler(f.alphabet, "alphabet");
  p.transitions = sampler(f.transitions, "transitions");
  p.symbol_prefix = f.symbol_prefix;
  p.verbose = f.verbose;
  return p;
}

TransducerParams transducer_params(const Options& o, Alphabet input_alphabet) {
  const auto& f = o.transducer;
  TransducerParams p;
  p.read_input_alphabet = std::move(input_alphabet);
  p.ratio_i_o = f.ratio_i_o;
  p.states = sampler(f.states, "states");
  p.alphabet = sampler(f.alphabet, "alphabet");
  p.transitions = sampler(f.transitions, "transitions");
  p.symbol_prefix = f.symbol_prefix;
  p.verbose = f.verbose;
  return p;
}

NoiseSpec noise_spec(const Options& o, NoiseKind kind, std::size_t word_length) {
  const auto& f = o.noise;
  NoiseSpec spec;
  spec.kind = kind;
  spec.noise_level = f.noise_level;
  spec.prob_insert = f.prob_insert;
  if (f.n_change) {
    if (*f.n_change < 0 || static_cast<unsigned long long>(*f.n_change) > word_length) {
      throw InvalidSpec("--n-change = " + std::to_string(*f.n_change) + " is outside [0, " +
                        std::to_string(word_length) + "]");
    }
    spec.n_symbols_change = static_cast<std::size_t>(*f.n_change);
  }
  if (!f.alphabet.empty()) spec.alphabet = parse_alphabet(f.alphabet);
  return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  try {
    options = parse(args);
  } catch (const UsageError& e) {
    (e.code == kSuccess ? out : err) << e.message;
    return e.code;
  }
  try {
    return dispatch(options, out, err);
  } catch (const InputExhausted& e) {
    err << "error: " << e.what() << "\n"
        << "partial output length " << e.partial_output().size() << ", shortfall "
        << e.shortfall() << '\n';
    return kInputExhausted;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const InvalidLength& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const InvalidSymbol& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const AlphabetTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kGenerationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kGenerationFailure;
  }
}

}  // namespace depseq::cli
