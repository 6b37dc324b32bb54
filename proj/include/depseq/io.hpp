#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "depseq/automata.hpp"
#include "depseq/chain.hpp"

namespace depseq {

inline constexpr int kFormatVersion = 1;

using Automaton = std::variant<Producer, Transducer>;

/// Canonical JSON: sorted keys, states in index order, transitions sorted by
/// (source, symbol). Byte-stable for equal automata.
std::string serialize_automaton(const Producer& p);
std::string serialize_automaton(const Transducer& t);
std::string serialize_automaton(const Automaton& a);

/// Throws ParseError for malformed text and ValidationError when the
/// described automaton breaks an invariant.
Automaton parse_automaton(std::string_view text);

struct DotOptions {
  std::string graph_name;  // defaults to the automaton kind
  std::string rankdir = "LR";
};

std::string to_dot(const Producer& p, const DotOptions& options = {});
std::string to_dot(const Transducer& t, const DotOptions& options = {});
std::string to_dot(const Automaton& a, const DotOptions& options = {});

std::string chain_spec_to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(std::string_view text);

std::string dataset_to_json(const ChainDataset& dataset);
ChainDataset dataset_from_json(std::string_view text);
/// Rows of (node_id, position, symbol) over the observed sequences.
std::string dataset_to_csv(const ChainDataset& dataset);

void write_dataset(const ChainDataset& dataset, const std::filesystem::path& path);
ChainDataset read_dataset(const std::filesystem::path& path);
void write_dataset_csv(const ChainDataset& dataset, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace depseq
