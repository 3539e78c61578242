#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "termex/errors.hpp"

namespace termex::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(TERMEX_FIXTURE_DIR) + "/" + name;
}

// Self-cleaning scratch directory for one test case.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    root_ = std::filesystem::temp_directory_path() /
            ("termex_" + tag + "_" + std::to_string(counter()++));
    std::filesystem::create_directories(root_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(root_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string path(const std::string& name) const { return (root_ / name).string(); }
  const std::filesystem::path& root() const { return root_; }

  std::string write(const std::string& name, const std::string& content) const {
    const auto full = root_ / name;
    std::filesystem::create_directories(full.parent_path());
    std::ofstream out(full, std::ios::binary);
    out << content;
    if (!out) throw IoError("test fixture write failed: " + full.string());
    return full.string();
  }

 private:
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::filesystem::path root_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("test read failed: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace termex::test
