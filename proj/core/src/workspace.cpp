#include "mphide/workspace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "mphide/error.hpp"

namespace mphide {
namespace {

using nlohmann::json;

constexpr std::string_view kKindNames[] = {"matrix", "hidden-pair", "key", "disguise-key", "report"};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json header(FileKind kind) {
  json j = json::object();
  j["version"] = kWorkspaceVersion;
  j["kind"] = std::string(to_string(kind));
  return j;
}

json parse_document(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) raise(ErrorKind::Parse, "not a JSON object");
  if (!j.contains("version") || !j["version"].is_number_integer()) {
    raise(ErrorKind::Parse, "missing integer field 'version'");
  }
  if (j["version"].get<long long>() != kWorkspaceVersion) {
    raise(ErrorKind::UnsupportedVersion,
          "file version " + j["version"].dump() + ", supported " + std::to_string(kWorkspaceVersion));
  }
  if (!j.contains("kind") || !j["kind"].is_string()) raise(ErrorKind::Parse, "missing field 'kind'");
  return j;
}

json expect(std::string_view text, FileKind kind) {
  json j = parse_document(text);
  if (j["kind"].get<std::string>() != to_string(kind)) {
    raise(ErrorKind::Parse, "expected a " + std::string(to_string(kind)) + " file, got " +
                                j["kind"].get<std::string>());
  }
  return j;
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) raise(ErrorKind::Parse, std::string("missing field '") + name + "'");
  return j[name];
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) raise(ErrorKind::Parse, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

BigInteger integer_field(const json& j, const char* name) {
  return BigInteger::parse(string_field(j, name));
}

json rows_json(const ExactMatrix& m) { return m.row_strings(); }

ExactMatrix rows_from(const json& j, const char* name, std::size_t dim) {
  const json& rows = field(j, name);
  if (!rows.is_array()) raise(ErrorKind::Parse, std::string("field '") + name + "' must be a list");
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    if (!row.is_array()) raise(ErrorKind::Parse, "matrix rows must be lists");
    auto& out = cells.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_string()) raise(ErrorKind::Parse, "matrix entries must be strings");
      out.push_back(cell.get<std::string>());
    }
  }
  ExactMatrix m = ExactMatrix::parse_rows(cells);
  if (m.dim() != dim) {
    raise(ErrorKind::DimensionMismatch, "dim says " + std::to_string(dim) + " but rows give " +
                                            std::to_string(m.dim()));
  }
  return m;
}

std::size_t dim_field(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
    raise(ErrorKind::Parse, "field 'dim' must be a positive integer");
  }
  return d.get<std::size_t>();
}

std::size_t index_field(const json& j, const char* name) {
  return static_cast<std::size_t>(integer_field(j, name).to_uint64());
}

}  // namespace

std::string_view to_string(FileKind kind) { return kKindNames[static_cast<int>(kind)]; }

FileKind peek_kind(std::string_view text) {
  const json j = parse_document(text);
  const std::string kind = j["kind"].get<std::string>();
  for (int i = 0; i < 5; ++i) {
    if (kKindNames[i] == kind) return static_cast<FileKind>(i);
  }
  raise(ErrorKind::Parse, "unknown file kind '" + kind + "'");
}

std::string encode_matrix(const ExactMatrix& m) {
  json j = header(FileKind::Matrix);
  j["dim"] = m.dim();
  j["rows"] = rows_json(m);
  return dump(j);
}

ExactMatrix decode_matrix(std::string_view text) {
  const json j = expect(text, FileKind::Matrix);
  return rows_from(j, "rows", dim_field(j));
}

std::string encode_hidden_pair(const HiddenPair& hp) {
  json j = header(FileKind::HiddenPair);
  j["dim"] = hp.c.dim();
  j["c"] = rows_json(hp.c);
  j["d"] = rows_json(hp.d);
  return dump(j);
}

HiddenPair decode_hidden_pair(std::string_view text) {
  const json j = expect(text, FileKind::HiddenPair);
  const std::size_t dim = dim_field(j);
  return {rows_from(j, "c", dim), rows_from(j, "d", dim)};
}

std::string encode_key(const KeyFile& key) {
  json j = header(FileKind::Key);
  j["k1"] = key.pair.k1().to_string();
  j["k2"] = key.pair.k2().to_string();
  if (key.quotients) {
    json qs = json::array();
    for (const auto& q : key.quotients->terms()) qs.push_back(q.to_string());
    j["quotients"] = qs;
  }
  return dump(j);
}

KeyFile decode_key(std::string_view text) {
  const json j = expect(text, FileKind::Key);
  KeyFile key{CoprimePair(integer_field(j, "k1"), integer_field(j, "k2")), std::nullopt};
  if (j.contains("quotients")) {
    const json& qs = j["quotients"];
    if (!qs.is_array()) raise(ErrorKind::Parse, "field 'quotients' must be a list");
    std::vector<BigInteger> terms;
    for (const auto& q : qs) {
      if (!q.is_string()) raise(ErrorKind::Parse, "quotients must be decimal strings");
      terms.push_back(BigInteger::parse(q.get<std::string>()));
    }
    QuotientSequence seq(std::move(terms));
    if (!(continued_fraction_eval(seq) == key.pair)) {
      raise(ErrorKind::KeyMismatch, "stored quotients do not match the pair (" +
                                        key.pair.k1().to_string() + ", " +
                                        key.pair.k2().to_string() + ")");
    }
    key.quotients = std::move(seq);
  }
  return key;
}

std::string encode_disguise_key(const DisguiseKey& key) {
  json j = header(FileKind::DisguiseKey);
  j["k1"] = key.k1.to_string();
  j["k2"] = key.k2.to_string();
  j["m"] = key.m.to_string();
  j["l"] = key.l.to_string();
  j["p_r"] = std::to_string(key.index_c);
  j["p_s"] = std::to_string(key.index_d);
  return dump(j);
}

DisguiseKey decode_disguise_key(std::string_view text) {
  const json j = expect(text, FileKind::DisguiseKey);
  DisguiseKey key{integer_field(j, "k1"), integer_field(j, "k2"), integer_field(j, "m"),
                  integer_field(j, "l"),  index_field(j, "p_r"),  index_field(j, "p_s")};
  key.validate();
  return key;
}

std::string encode_report(std::string_view report_type, std::string_view body_json) {
  json body = json::parse(body_json.begin(), body_json.end(), nullptr, false);
  if (body.is_discarded() || !body.is_object()) raise(ErrorKind::Parse, "report body must be an object");
  json j = header(FileKind::Report);
  j["report"] = std::string(report_type);
  j["body"] = std::move(body);
  return dump(j);
}

ReportFile decode_report(std::string_view text) {
  const json j = expect(text, FileKind::Report);
  const json& body = field(j, "body");
  if (!body.is_object()) raise(ErrorKind::Parse, "report body must be an object");
  return {string_field(j, "report"), body.dump()};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) raise(ErrorKind::Io, "cannot read " + path.string());
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : ".";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorKind::Io, "cannot create " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) raise(ErrorKind::Io, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    raise(ErrorKind::Io, "cannot replace " + path.string());
  }
}

}  // namespace mphide
