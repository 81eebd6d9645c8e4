#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "cli/json.hpp"

namespace brl::cli {

struct OutputEntry {
  std::string path;
  std::uintmax_t bytes = 0;
  std::string sha1;
};

// Provenance of one command invocation: what ran, on which inputs, and
// which files it wrote.
class RunRecord {
 public:
  RunRecord(std::string command, json config);

  // Hash of the canonical config text, computed like a git blob id.
  const std::string& input_hash() const { return input_hash_; }

  // Hashes and sizes a file that has already been written and closed.
  void add_output(const std::string& path);

  json to_json() const;

 private:
  std::string command_;
  json config_;
  std::string input_hash_;
  std::chrono::steady_clock::time_point start_;
  std::vector<OutputEntry> outputs_;
};

// Lowercase hex SHA-1 of "blob <size>\0" followed by the bytes.
std::string git_blob_sha1(const std::string& bytes);

std::string sha1_hex(const std::string& bytes);

}  // namespace brl::cli
