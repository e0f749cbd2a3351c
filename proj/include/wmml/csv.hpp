#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "wmml/sample.hpp"

namespace wmml {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Dataset file: header "y,delta", one "y,delta" row per item, optional
// "#censor_time=<c>" metadata line.
struct DatasetFile {
    std::vector<double> y;
    std::vector<int> delta;
    std::optional<double> censor_time;
};

DatasetFile read_dataset(std::istream& in);
DatasetFile read_dataset_file(const std::string& path);
void write_dataset(std::ostream& out, const Sample& s);

// Scheme resolution: an explicit scheme wins; otherwise TypeI when the file
// carries a censor time, Complete when all rows are uncensored.
Sample to_sample(const DatasetFile& file,
                 std::optional<CensorScheme> scheme = std::nullopt);

}  // namespace wmml
