#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "quakebrief/classify/nn.hpp"
#include "quakebrief/corpus.hpp"
#include "quakebrief/ingest.hpp"

namespace qbtest {

namespace fs = std::filesystem;

/// Path under the repository's data/ directory.
fs::path data_path(const std::string& relative);

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "qbtest");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string read_text(const fs::path& path);
void write_text(const fs::path& path, const std::string& text);

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs the quakebrief binary with the given shell-quoted arguments.
CommandResult run_cli(const std::string& args);

/// Random sentences of 2..12 lowercase words drawn from a small vocabulary,
/// so repeated words and overlapping sentences are common.
std::vector<qb::Sentence> random_sentences(qb::Rng& rng, std::size_t count, const std::string& document_id = "doc");

/// Random token sequence: `length` ids in [2, vocab), PAD afterwards.
qb::TokenSequence random_sequence(qb::Rng& rng, std::size_t vocab, std::size_t length);

/// Event from the bundled USGS feed fixture. Throws when absent.
qb::HazardEvent bundled_event(const std::string& id);

/// Social posts of the bundled Ya'an fixture inside the default collection window.
std::vector<qb::Document> yaan_posts();

}  // namespace qbtest
