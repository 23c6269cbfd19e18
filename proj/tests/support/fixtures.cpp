#include "fixtures.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <sys/wait.h>

namespace qbtest {

fs::path data_path(const std::string& relative) { return fs::path(QB_DATA_DIR) / relative; }

TempDir::TempDir(const std::string& prefix) {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          (prefix + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter.fetch_add(1)));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

CommandResult run_cli(const std::string& args) {
  TempDir tmp("qbcli");
  const fs::path out = tmp / "stdout";
  const fs::path err = tmp / "stderr";
  const std::string cmd = std::string("'") + QB_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  CommandResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_text(out);
  r.err = read_text(err);
  return r;
}

std::vector<qb::Sentence> random_sentences(qb::Rng& rng, std::size_t count, const std::string& document_id) {
  static const std::vector<std::string> words = {"quake", "bridge", "road", "school", "damage", "people",
                                                 "tent", "power", "city", "collapsed", "rescue", "water",
                                                 "hospital", "walls", "aid", "night"};
  std::uniform_int_distribution<std::size_t> len(2, 12);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::vector<qb::Sentence> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string text;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) {
      std::string w = words[pick(rng)];
      if (k == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
      if (k > 0) text += ' ';
      text += w;
    }
    text += '.';
    out.push_back({document_id, i, text});
  }
  return out;
}

qb::TokenSequence random_sequence(qb::Rng& rng, std::size_t vocab, std::size_t length) {
  qb::TokenSequence s;
  std::uniform_int_distribution<qb::TokenId> pick(2, static_cast<qb::TokenId>(vocab - 1));
  for (std::size_t i = 0; i < length && i < qb::kSequenceLength; ++i) s.ids[i] = pick(rng);
  return s;
}

qb::HazardEvent bundled_event(const std::string& id) {
  const auto feed = qb::fetch_usgs_events(read_text(data_path("fixtures/usgs_feed.geojson")));
  for (const auto& e : feed.events) {
    if (e.id == id) return e;
  }
  throw std::runtime_error("event " + id + " not in the bundled feed");
}

std::vector<qb::Document> yaan_posts() {
  const qb::FixtureSource source(data_path("fixtures/yaan2013/social"), qb::SourceKind::kSocial);
  return qb::collect_documents(bundled_event("yaan2013"), source, {});
}

}  // namespace qbtest
