#pragma once
// Run manifests: every CLI command records what it ran (command, full config
// snapshot and its hash, master seed, derived stream tags, library version,
// wall-clock bounds, status) and what it produced (path, SHA-256, size per
// output file). SHA-256 is implemented here so verification has no external
// dependency.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace xferlab::manifest {

// Names of the streams derived from the master seed; listed in the manifest
// so a reader knows which generators a run consumed.
inline constexpr const char* kSubstreamTags[] = {
    "signals", "sample", "init-std", "init-up", "transplant", "subset", "test", "run",
};

std::string sha256_hex(const void* data, std::size_t n);
std::string sha256_hex(const std::string& s);
std::string sha256_file(const std::filesystem::path& file); // throws if unreadable

struct OutputFile {
    std::string path; // relative to the manifest's directory
    std::string sha256;
    std::uint64_t bytes = 0;
};

struct RunManifest {
    std::string command;
    std::string config_text; // emit_config snapshot, hashed into config_sha256
    std::uint64_t master_seed = 0;
    std::string status = "ok"; // "ok" | "failed" | "interrupted"
    std::string error;         // set when status is "failed"
    std::string started;       // ISO-8601 UTC
    std::string finished;
    std::vector<OutputFile> outputs;
};

std::string utc_now();

// Hashes base/rel and appends it to m.outputs under the relative path.
void add_output(RunManifest& m, const std::filesystem::path& base, const std::string& rel);

// Atomic write (temp + rename) of manifest JSON; read throws on malformed input.
void write_manifest(const std::filesystem::path& file, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& file);

} // namespace xferlab::manifest
