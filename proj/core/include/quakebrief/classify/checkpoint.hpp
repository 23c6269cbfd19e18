#pragma once

#include <filesystem>
#include <string>

#include "quakebrief/classify/suite.hpp"

namespace qb {

/// A checkpoint is a directory holding `manifest.json` (kind, architecture
/// constants, seed, config, vocabulary, tensor list) and one `<tensor>.f64`
/// file per tensor: row-major little-endian IEEE-754 doubles.
inline constexpr const char* kCheckpointFormat = "quakebrief-checkpoint";
inline constexpr int kCheckpointVersion = 1;

void save_checkpoint(const std::filesystem::path& dir, const LinearClassifier& classifier);
void save_checkpoint(const std::filesystem::path& dir, const CnnClassifier& classifier);
void save_checkpoint(const std::filesystem::path& dir, const GanClassifier& classifier);

/// "lr", "svm", "cnn" or "gan" as recorded in the manifest.
std::string checkpoint_kind(const std::filesystem::path& dir);

LinearClassifier load_linear_checkpoint(const std::filesystem::path& dir);
CnnClassifier load_cnn_checkpoint(const std::filesystem::path& dir);
GanClassifier load_gan_checkpoint(const std::filesystem::path& dir);

}  // namespace qb
