/*******************************************************************************
 * Vertex-centric graph streams over METIS text and binary adjacency files.
 *
 * Both streams yield one neighborhood per call with 0-indexed vertex ids, in
 * file order. Self-loops and parallel edges are rejected; the total number of
 * adjacency entries is checked against the header once the stream is drained.
 *
 * @file:   graph_io.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "streamep/definitions.h"

namespace streamep {

struct GraphHeader {
  NodeID n = 0;
  EdgeID m = 0;
};

constexpr std::uint64_t kBinaryMagic = 0x5354435243555431ULL;
constexpr std::uint64_t kBinaryVersion = 1;

class VertexStream {
public:
  virtual ~VertexStream() = default;

  [[nodiscard]] const GraphHeader &header() const { return _header; }

  // Index of the next vertex to be read (== vertices consumed so far).
  [[nodiscard]] NodeID position() const { return _position; }
  [[nodiscard]] bool done() const { return _position == _header.n; }

  // Reads the next neighborhood into `out`. Returns false once all n vertices
  // were consumed.
  bool next(std::vector<NodeID> &out);

  // Seconds spent inside next() (parse/IO accounting).
  [[nodiscard]] double io_seconds() const { return _io_seconds; }

protected:
  virtual void read_neighborhood(std::vector<NodeID> &out) = 0;
  virtual void finish() {}

  GraphHeader _header;

private:
  void validate(const std::vector<NodeID> &out);

  NodeID _position = 0;
  EdgeID _forward_entries = 0;
  EdgeID _backward_entries = 0;
  std::vector<NodeID> _stamp;
  double _io_seconds = 0.0;
};

class MetisStream final : public VertexStream {
public:
  explicit MetisStream(const std::string &path);

protected:
  void read_neighborhood(std::vector<NodeID> &out) override;
  void finish() override;

private:
  bool next_content_line(std::string &line);

  std::ifstream _in;
  std::string _line;
  std::size_t _line_number = 0;
};

class BinaryStream final : public VertexStream {
public:
  explicit BinaryStream(const std::string &path);

protected:
  void read_neighborhood(std::vector<NodeID> &out) override;

private:
  std::ifstream _in;
  std::vector<std::uint64_t> _offsets;
  std::vector<std::uint64_t> _buffer;
};

std::unique_ptr<VertexStream> open_metis_stream(const std::string &path);
std::unique_ptr<VertexStream> open_binary_stream(const std::string &path);

// Detects the format from the leading magic number.
std::unique_ptr<VertexStream> open_graph_stream(const std::string &path);

// Reads a whole METIS text graph and writes the binary adjacency encoding.
void convert_metis_to_binary(const std::string &metis_path, const std::string &binary_path);

// Writes an unweighted undirected graph given as 0-indexed adjacency lists.
void write_metis(const std::vector<std::vector<NodeID>> &adjacency, const std::string &path);

} // namespace streamep
