// Copyright 2026 The ocgec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace ocgec {

// Single-quotes `arg` for /bin/sh.
std::string shell_quote(std::string_view arg);

// Runs `command` with /bin/sh -c, sending stdout and stderr to `log_path`.
// Returns the exit status, or 128 + signal number if the child was killed.
// Throws ProcessError if the shell cannot be started.
int run_shell(const std::string& command, const std::filesystem::path& log_path);

// A long-running child speaking a line protocol on stdin/stdout. stderr is
// inherited. Not thread-safe; callers serialize access.
class LineChannel {
 public:
  explicit LineChannel(const std::string& command);
  ~LineChannel();
  LineChannel(const LineChannel&) = delete;
  LineChannel& operator=(const LineChannel&) = delete;

  // Returns false if the child is no longer reading.
  bool write_line(std::string_view line);
  // nullopt on end of stream.
  std::optional<std::string> read_line();
  // Closes the child's stdin and waits for it. Idempotent.
  int close();

 private:
  int fd_ = -1;
  int pid_ = -1;
  std::optional<int> status_;
  std::string buffer_;
};

}  // namespace ocgec
