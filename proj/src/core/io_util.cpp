// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/io_util.hpp"

#include <sys/stat.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>

#include "core/error.hpp"

namespace eai {

namespace {

[[noreturn]] void throw_io(const std::string& path, const char* what) {
    throw Error(ErrorCode::kIo, std::string(what) + " " + path + ": " + std::strerror(errno));
}

} // namespace

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io(path, "cannot open");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw_io(path, "cannot read");
    return data;
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_io(path, "cannot open");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw_io(path, "cannot write");
}

Digest file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io(path, "cannot open");
    Keccak256 hasher;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        hasher.update(reinterpret_cast<const uint8_t*>(buf), static_cast<size_t>(in.gcount()));
    if (in.bad()) throw_io(path, "cannot read");
    return hasher.finish();
}

void restrict_file_mode(const std::string& path) {
    if (::chmod(path.c_str(), S_IRUSR | S_IWUSR) != 0) throw_io(path, "cannot chmod");
}

std::string iso8601_utc(int64_t unix_seconds) {
    std::time_t t = static_cast<std::time_t>(unix_seconds);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string now_iso8601_utc() { return iso8601_utc(unix_now()); }

int64_t unix_now() { return static_cast<int64_t>(std::time(nullptr)); }

} // namespace eai
