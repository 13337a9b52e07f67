#pragma once

#include <stdexcept>
#include <string>

namespace hampat {

// A randomized or greedy step could not complete. Callers may retry with a
// fresh seed; `stage` names the step and `detail` carries diagnostics.
class StageFailure : public std::runtime_error {
  public:
    StageFailure(std::string stage, const std::string& detail)
        : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)) {}

    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }

  private:
    std::string stage_;
};

// A sample-then-verify loop used up its budget. `worst_ratio` is the best
// (largest) value the audited minimum-degree ratio reached over all attempts.
class RetriesExhausted : public StageFailure {
  public:
    RetriesExhausted(std::string stage, int attempts, double worst_ratio)
        : StageFailure(std::move(stage), "retries exhausted after " + std::to_string(attempts) +
                                             " attempts; best audited degree ratio " + std::to_string(worst_ratio)),
          attempts_(attempts),
          worst_ratio_(worst_ratio) {}

    [[nodiscard]] int attempts() const noexcept { return attempts_; }
    [[nodiscard]] double worst_ratio() const noexcept { return worst_ratio_; }

  private:
    int attempts_;
    double worst_ratio_;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::string field, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + message),
          line_(line),
          field_(std::move(field)) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

  private:
    std::size_t line_;
    std::string field_;
};

}  // namespace hampat
