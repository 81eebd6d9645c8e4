#include "cli/run_record.hpp"

#include <openssl/evp.h>

#include <array>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "brl/errors.hpp"

namespace brl::cli {

std::string sha1_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha1(), nullptr) != 1)
    throw std::runtime_error("SHA-1 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

std::string git_blob_sha1(const std::string& bytes) {
  std::string framed = "blob " + std::to_string(bytes.size());
  framed.push_back('\0');
  framed += bytes;
  return sha1_hex(framed);
}

RunRecord::RunRecord(std::string command, json config)
    : command_(std::move(command)),
      config_(std::move(config)),
      input_hash_(git_blob_sha1(config_.dump())),
      start_(std::chrono::steady_clock::now()) {}

void RunRecord::add_output(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot reopen output '" + path + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  outputs_.push_back({path, bytes.size(), git_blob_sha1(bytes)});
}

json RunRecord::to_json() const {
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  json outputs = json::array();
  for (const OutputEntry& o : outputs_)
    outputs.push_back({{"path", o.path}, {"bytes", o.bytes}, {"sha1", o.sha1}});
  return json{{"command", command_},
              {"config", config_},
              {"input_hash", input_hash_},
              {"wall_time_s", wall},
              {"outputs", outputs}};
}

}  // namespace brl::cli
