#include "smt_process.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "lctrs/errors.hpp"

namespace lctrs::smt {

SolverProcess::SolverProcess(const std::string& path, const std::vector<std::string>& args) {
  int to_child[2], from_child[2], exec_err[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0 || pipe2(exec_err, O_CLOEXEC) != 0)
    throw LctrsError("pipe() failed: " + std::string(strerror(errno)));

  pid_ = fork();
  if (pid_ < 0) throw LctrsError("fork() failed: " + std::string(strerror(errno)));

  if (pid_ == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    close(exec_err[0]);
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>(path.c_str()));
    for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execvp(path.c_str(), argv.data());
    int err = errno;
    [[maybe_unused]] ssize_t n = write(exec_err[1], &err, sizeof(err));
    _exit(127);
  }

  close(to_child[0]);
  close(from_child[1]);
  close(exec_err[1]);
  in_fd_ = to_child[1];
  out_fd_ = from_child[0];

  int err = 0;
  if (read(exec_err[0], &err, sizeof(err)) == sizeof(err)) {
    close(exec_err[0]);
    reap_blocking();
    close(in_fd_);
    close(out_fd_);
    in_fd_ = out_fd_ = -1;
    throw SolverNotFoundError("cannot execute solver '" + path + "': " + strerror(err));
  }
  close(exec_err[0]);
}

SolverProcess::~SolverProcess() {
  kill_now();
  if (in_fd_ >= 0) close(in_fd_);
  if (out_fd_ >= 0) close(out_fd_);
}

bool SolverProcess::write_all(std::string_view data) {
  if (in_fd_ < 0) return false;
  // The child may die mid-write; take EPIPE as a result, not a crash.
  signal(SIGPIPE, SIG_IGN);
  while (!data.empty()) {
    ssize_t n = write(in_fd_, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
  return true;
}

void SolverProcess::close_stdin() {
  if (in_fd_ >= 0) {
    close(in_fd_);
    in_fd_ = -1;
  }
}

std::optional<std::string> SolverProcess::read_line(Deadline deadline) {
  while (true) {
    auto nl = buf_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buf_.substr(0, nl);
      buf_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    if (eof_) {
      if (buf_.empty()) return std::nullopt;
      std::string line = std::move(buf_);
      buf_.clear();
      return line;
    }
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) throw TimeoutExpired{};
    auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
    struct pollfd pfd{out_fd_, POLLIN, 0};
    int pr = poll(&pfd, 1, static_cast<int>(std::min<long long>(wait.count(), 1000)));
    if (pr < 0 && errno != EINTR) throw LctrsError("poll() failed");
    if (pr <= 0) continue;
    char chunk[4096];
    ssize_t n = read(out_fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw LctrsError("read() from solver failed");
    }
    if (n == 0) {
      eof_ = true;
      continue;
    }
    buf_.append(chunk, static_cast<std::size_t>(n));
  }
}

void SolverProcess::kill_now() {
  if (pid_ > 0 && !reaped_) {
    kill(pid_, SIGKILL);
    reap_blocking();
  }
}

bool SolverProcess::running() {
  if (pid_ <= 0 || reaped_) return false;
  int status = 0;
  pid_t r = waitpid(pid_, &status, WNOHANG);
  if (r == pid_) {
    reaped_ = true;
    return false;
  }
  return r == 0;
}

void SolverProcess::reap_blocking() {
  if (pid_ > 0 && !reaped_) {
    int status = 0;
    while (waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
    }
    reaped_ = true;
  }
}

}  // namespace lctrs::smt
