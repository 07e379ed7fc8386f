#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <sys/types.h>

namespace lctrs::smt {

using Deadline = std::chrono::steady_clock::time_point;

/// A child process with piped stdin/stdout. Killed and reaped on
/// destruction; stderr is inherited.
class SolverProcess {
 public:
  /// Throws SolverNotFoundError when the binary cannot be executed.
  SolverProcess(const std::string& path, const std::vector<std::string>& args);
  ~SolverProcess();

  SolverProcess(const SolverProcess&) = delete;
  SolverProcess& operator=(const SolverProcess&) = delete;

  /// False on EPIPE (child gone).
  bool write_all(std::string_view data);
  void close_stdin();

  /// Next line of stdout, without the newline. nullopt on EOF. Throws
  /// TimeoutExpired when the deadline passes first.
  struct TimeoutExpired {};
  std::optional<std::string> read_line(Deadline deadline);

  void kill_now();
  bool running();
  pid_t pid() const { return pid_; }

 private:
  void reap_blocking();
  pid_t pid_ = -1;
  int in_fd_ = -1;   // child's stdin (we write)
  int out_fd_ = -1;  // child's stdout (we read)
  bool reaped_ = false;
  std::string buf_;
  bool eof_ = false;
};

}  // namespace lctrs::smt
