#ifndef AVLM_IO_INGEST_HPP
#define AVLM_IO_INGEST_HPP

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "avlm/regression.hpp"

namespace avlm::io {

/// Ingestion failure with the 1-based line number of the offending row.
/// No silent skips: the first malformed line aborts the run.
class IngestError : public std::runtime_error {
 public:
  IngestError(long line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Column roles for header CSV input.
struct Schema {
  std::string y;
  std::vector<std::string> x;
  std::vector<std::string> z;
};

enum class Format { Csv, Ndjson };

/// Guess from the file name, defaulting to CSV.
Format detect_format(const std::string& path);

/**
 * Stream DesignPoints from header CSV (columns mapped by `schema`) in file
 * order.  Throws IngestError on a missing column, non-numeric cell or
 * ragged row.
 */
void ingest_csv(std::istream& in, const Schema& schema,
                const std::function<void(const DesignPoint&)>& sink);

/**
 * Stream DesignPoints from newline-delimited JSON records of the form
 * {"y": 1.0, "x": [..], "z": [..]}.
 */
void ingest_ndjson(std::istream& in,
                   const std::function<void(const DesignPoint&)>& sink);

/**
 * Generic named-column CSV access used by the ATE command: delivers the
 * requested columns, in the requested order, row by row.
 */
void ingest_columns(std::istream& in, const std::vector<std::string>& columns,
                    const std::function<void(const std::vector<double>&)>& sink);

}  // namespace avlm::io

#endif  // AVLM_IO_INGEST_HPP
