/*******************************************************************************
 * METIS text and binary adjacency streams.
 *
 * @file:   graph_io.cc
 ******************************************************************************/
#include "streamep/graph_io.h"

#include <bit>
#include <charconv>
#include <chrono>
#include <cstring>
#include <sstream>

namespace streamep {

namespace {

std::string at_vertex(NodeID v) { return " (vertex " + std::to_string(v + 1) + ")"; }

bool is_blank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename T> bool parse_uint(const char *&pos, const char *end, T &value) {
  while (pos != end && (*pos == ' ' || *pos == '\t' || *pos == '\r')) {
    ++pos;
  }
  if (pos == end) {
    return false;
  }
  auto [ptr, ec] = std::from_chars(pos, end, value);
  if (ec != std::errc{}) {
    throw FormatError("invalid integer near '" + std::string(pos, std::min<std::size_t>(end - pos, 16)) + "'");
  }
  pos = ptr;
  if (pos != end && *pos != ' ' && *pos != '\t' && *pos != '\r') {
    throw FormatError("unexpected character '" + std::string(1, *pos) + "'");
  }
  return true;
}

std::uint64_t read_u64(std::ifstream &in, const char *what) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char *>(bytes), 8)) {
    throw FormatError(std::string("truncated binary graph: missing ") + what);
  }
  std::uint64_t value = 0;
  for (int i = 7; i >= 0; --i) {
    value = (value << 8) | bytes[i];
  }
  return value;
}

void write_u64(std::ofstream &out, std::uint64_t value) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) {
    bytes[i] = static_cast<unsigned char>(value >> (8 * i));
  }
  out.write(reinterpret_cast<const char *>(bytes), 8);
}

} // namespace

bool VertexStream::next(std::vector<NodeID> &out) {
  if (_position == _header.n) {
    return false;
  }
  const auto start = std::chrono::steady_clock::now();
  out.clear();
  read_neighborhood(out);
  validate(out);
  ++_position;
  if (_position == _header.n) {
    finish();
    if (_forward_entries != _header.m || _backward_entries != _header.m) {
      throw FormatError("adjacency is inconsistent with header: " + std::to_string(_forward_entries) +
                        " forward and " + std::to_string(_backward_entries) + " backward entries, expected m=" +
                        std::to_string(_header.m));
    }
    _stamp = {};
  }
  _io_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return true;
}

void VertexStream::validate(const std::vector<NodeID> &out) {
  if (_stamp.empty()) {
    _stamp.assign(_header.n, kInvalidNode);
  }
  for (const NodeID v : out) {
    if (v >= _header.n) {
      throw FormatError("neighbor id out of range" + at_vertex(_position));
    }
    if (v == _position) {
      throw FormatError("self-loop" + at_vertex(_position));
    }
    if (_stamp[v] == _position) {
      throw FormatError("parallel edge to " + std::to_string(v + 1) + at_vertex(_position));
    }
    _stamp[v] = _position;
    if (v > _position) {
      ++_forward_entries;
    } else {
      ++_backward_entries;
    }
  }
}

//
// METIS text
//

MetisStream::MetisStream(const std::string &path) : _in(path) {
  if (!_in) {
    throw IoError("cannot open graph file '" + path + "'");
  }
  if (!next_content_line(_line)) {
    throw FormatError("missing header line");
  }
  const char *pos = _line.data();
  const char *end = pos + _line.size();
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t fmt = 0;
  if (!parse_uint(pos, end, n) || !parse_uint(pos, end, m)) {
    throw FormatError("malformed header '" + _line + "'");
  }
  if (parse_uint(pos, end, fmt) && fmt != 0) {
    throw FormatError("weighted graphs are not supported (fmt=" + std::to_string(fmt) + ")");
  }
  std::uint64_t extra = 0;
  if (parse_uint(pos, end, extra)) {
    throw FormatError("malformed header '" + _line + "'");
  }
  if (n == 0 || n >= kInvalidNode) {
    throw FormatError("vertex count out of range: " + std::to_string(n));
  }
  _header.n = static_cast<NodeID>(n);
  _header.m = m;
}

bool MetisStream::next_content_line(std::string &line) {
  while (std::getline(_in, line)) {
    ++_line_number;
    if (!line.empty() && line[0] == '%') {
      continue;
    }
    return true;
  }
  return false;
}

void MetisStream::read_neighborhood(std::vector<NodeID> &out) {
  if (!next_content_line(_line)) {
    throw FormatError("expected " + std::to_string(_header.n) + " vertex lines, found " +
                      std::to_string(position()));
  }
  const char *pos = _line.data();
  const char *end = pos + _line.size();
  std::uint64_t id = 0;
  try {
    while (parse_uint(pos, end, id)) {
      if (id == 0 || id > _header.n) {
        throw FormatError("neighbor id " + std::to_string(id) + " out of range [1.." + std::to_string(_header.n) +
                          "]");
      }
      out.push_back(static_cast<NodeID>(id - 1));
    }
  } catch (const FormatError &e) {
    throw FormatError(std::string(e.what()) + " at line " + std::to_string(_line_number));
  }
}

void MetisStream::finish() {
  std::string rest;
  while (next_content_line(rest)) {
    if (!is_blank(rest)) {
      throw FormatError("more than n=" + std::to_string(_header.n) + " vertex lines");
    }
  }
}

//
// Binary adjacency
//

BinaryStream::BinaryStream(const std::string &path) : _in(path, std::ios::binary) {
  if (!_in) {
    throw IoError("cannot open graph file '" + path + "'");
  }
  if (read_u64(_in, "magic") != kBinaryMagic) {
    throw FormatError("bad magic number in binary graph");
  }
  const std::uint64_t version = read_u64(_in, "version");
  if (version != kBinaryVersion) {
    throw FormatError("unsupported binary graph version " + std::to_string(version));
  }
  const std::uint64_t n = read_u64(_in, "n");
  const std::uint64_t m = read_u64(_in, "m");
  if (n == 0 || n >= kInvalidNode) {
    throw FormatError("vertex count out of range: " + std::to_string(n));
  }
  _header.n = static_cast<NodeID>(n);
  _header.m = m;

  _offsets.resize(n + 1);
  for (auto &offset : _offsets) {
    offset = read_u64(_in, "offsets");
  }
  if (_offsets.front() != 0 || _offsets.back() != 2 * m) {
    throw FormatError("binary offsets do not span 2m adjacency entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (_offsets[i] > _offsets[i + 1]) {
      throw FormatError("binary offsets are not monotone");
    }
  }
}

void BinaryStream::read_neighborhood(std::vector<NodeID> &out) {
  const NodeID u = position();
  const std::uint64_t degree = _offsets[u + 1] - _offsets[u];
  _buffer.resize(degree);
  if (degree > 0 &&
      !_in.read(reinterpret_cast<char *>(_buffer.data()), static_cast<std::streamsize>(degree * sizeof(std::uint64_t)))) {
    throw FormatError("truncated binary adjacency" + at_vertex(u));
  }
  out.reserve(degree);
  for (std::uint64_t raw : _buffer) {
    if constexpr (std::endian::native == std::endian::big) {
      raw = __builtin_bswap64(raw);
    }
    if (raw >= _header.n) {
      throw FormatError("neighbor id out of range" + at_vertex(u));
    }
    out.push_back(static_cast<NodeID>(raw));
  }
}

std::unique_ptr<VertexStream> open_metis_stream(const std::string &path) {
  return std::make_unique<MetisStream>(path);
}

std::unique_ptr<VertexStream> open_binary_stream(const std::string &path) {
  return std::make_unique<BinaryStream>(path);
}

std::unique_ptr<VertexStream> open_graph_stream(const std::string &path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) {
    throw IoError("cannot open graph file '" + path + "'");
  }
  unsigned char bytes[8] = {};
  probe.read(reinterpret_cast<char *>(bytes), 8);
  std::uint64_t value = 0;
  for (int i = 7; i >= 0; --i) {
    value = (value << 8) | bytes[i];
  }
  if (probe.gcount() == 8 && value == kBinaryMagic) {
    return open_binary_stream(path);
  }
  return open_metis_stream(path);
}

void convert_metis_to_binary(const std::string &metis_path, const std::string &binary_path) {
  MetisStream in(metis_path);
  const GraphHeader header = in.header();

  // Offsets precede the adjacency, so buffer the neighborhoods first.
  std::vector<std::uint64_t> offsets;
  offsets.reserve(header.n + 1);
  offsets.push_back(0);
  std::vector<NodeID> adjacency;
  adjacency.reserve(2 * header.m);
  std::vector<NodeID> neighbors;
  while (in.next(neighbors)) {
    adjacency.insert(adjacency.end(), neighbors.begin(), neighbors.end());
    offsets.push_back(adjacency.size());
  }

  std::ofstream out(binary_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write '" + binary_path + "'");
  }
  write_u64(out, kBinaryMagic);
  write_u64(out, kBinaryVersion);
  write_u64(out, header.n);
  write_u64(out, header.m);
  for (const std::uint64_t offset : offsets) {
    write_u64(out, offset);
  }
  for (const NodeID v : adjacency) {
    write_u64(out, v);
  }
  if (!out) {
    throw IoError("write failed for '" + binary_path + "'");
  }
}

void write_metis(const std::vector<std::vector<NodeID>> &adjacency, const std::string &path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw IoError("cannot write '" + path + "'");
  }
  EdgeID entries = 0;
  for (const auto &neighbors : adjacency) {
    entries += neighbors.size();
  }
  out << adjacency.size() << ' ' << entries / 2 << '\n';
  std::string line;
  for (const auto &neighbors : adjacency) {
    line.clear();
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (i > 0) {
        line.push_back(' ');
      }
      line += std::to_string(neighbors[i] + 1);
    }
    line.push_back('\n');
    out << line;
  }
  if (!out) {
    throw IoError("write failed for '" + path + "'");
  }
}

} // namespace streamep
