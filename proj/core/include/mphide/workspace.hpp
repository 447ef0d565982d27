#pragma once

// Versioned JSON files exchanged between the command-line steps. Every file
// carries "version" and "kind"; numbers are decimal strings so that values of
// any size round-trip bit-exactly. Output is byte-for-byte deterministic
// (sorted keys, two-space indent, trailing newline).
//
//   matrix        {"dim": 2, "rows": [["1+4i", "3-2i"], ["2-3i", "-1-5i"]]}
//   hidden-pair   {"dim": 2, "c": rows, "d": rows}
//   key           {"k1": "17", "k2": "11", "quotients": ["1", "1", "1", "5"]}
//   disguise-key  {"k1", "k2", "m", "l", "p_r", "p_s"}
//   report        {"report": "<type>", "body": {...}}

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mphide/disguise.hpp"
#include "mphide/euclid.hpp"
#include "mphide/hide_recover.hpp"
#include "mphide/matrix.hpp"

namespace mphide {

inline constexpr int kWorkspaceVersion = 1;

enum class FileKind { Matrix, HiddenPair, Key, DisguiseKey, Report };

std::string_view to_string(FileKind kind);

// Kind of an encoded document. Parse on malformed input or unknown kinds,
// UnsupportedVersion on any version other than kWorkspaceVersion.
FileKind peek_kind(std::string_view text);

std::string encode_matrix(const ExactMatrix& m);
ExactMatrix decode_matrix(std::string_view text);

std::string encode_hidden_pair(const HiddenPair& hp);
HiddenPair decode_hidden_pair(std::string_view text);

struct KeyFile {
  CoprimePair pair;
  std::optional<QuotientSequence> quotients;
};

std::string encode_key(const KeyFile& key);
// KeyMismatch when the stored quotients do not reproduce the stored pair.
KeyFile decode_key(std::string_view text);

std::string encode_disguise_key(const DisguiseKey& key);
DisguiseKey decode_disguise_key(std::string_view text);

// `body_json` must be a JSON object; Parse otherwise.
std::string encode_report(std::string_view report_type, std::string_view body_json);
struct ReportFile {
  std::string report_type;
  std::string body_json;  // compact
};
ReportFile decode_report(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);  // Io
// Writes to a temporary file in the same directory, then renames it over
// `path`. Io on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace mphide
