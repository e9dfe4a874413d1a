// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Helpers for tests that exercise the shared library through eai.h only.
// Everything here is standard library + POSIX; no core headers.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <eai/eai.h>

namespace eai::test {

inline std::filesystem::path data_dir() { return std::filesystem::path(EAI_TEST_DATA_DIR); }

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Scratch directory removed on destruction.
class TempDir {
  public:
    TempDir() {
        std::string tmpl =
            (std::filesystem::temp_directory_path() / "eai_capi_XXXXXX").string();
        if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string write(const std::string& name, std::string_view contents) const {
        std::string p = file(name);
        std::ofstream out(p, std::ios::binary);
        out << contents;
        return p;
    }

  private:
    std::filesystem::path path_;
};

// "0x" + 38 zeros + 2 hex digits; matches the fixture address scheme.
inline std::string tag_hex(uint8_t tag) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", tag);
    return "0x" + std::string(36, '0') + "00" + buf;
}

// Owned string from a char** output; frees through the library.
class CStr {
  public:
    CStr() = default;
    ~CStr() { eai_string_free(ptr_); }
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;

    char** out() {
        eai_string_free(ptr_);
        ptr_ = nullptr;
        return &ptr_;
    }
    const char* get() const { return ptr_; }
    std::string str() const { return ptr_ ? std::string(ptr_) : std::string(); }

  private:
    char* ptr_ = nullptr;
};

} // namespace eai::test
