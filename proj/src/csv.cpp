#include "wmml/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace wmml {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "cannot parse number '" + tok + "'");
    }
}

}  // namespace

DatasetFile read_dataset(std::istream& in) {
    DatasetFile file;
    std::string raw;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#censor_time=", 0) == 0) {
                file.censor_time = parse_double(line.substr(13), lineno);
                if (!(*file.censor_time > 0.0))
                    throw ParseError(lineno, "censor_time must be > 0");
            }
            continue;  // other comment lines are ignored
        }
        if (!header_seen) {
            if (line != "y,delta")
                throw ParseError(lineno, "expected header 'y,delta'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(lineno, "expected 'y,delta' row");
        const double y = parse_double(trim(line.substr(0, comma)), lineno);
        const std::string dtok = trim(line.substr(comma + 1));
        if (dtok != "0" && dtok != "1")
            throw ParseError(lineno, "delta must be 0 or 1");
        if (!(y > 0.0)) throw ParseError(lineno, "y must be > 0");
        file.y.push_back(y);
        file.delta.push_back(dtok == "1" ? 1 : 0);
    }
    if (!header_seen) throw ParseError(lineno, "missing 'y,delta' header");
    if (file.y.empty()) throw ParseError(lineno, "no data rows");
    return file;
}

DatasetFile read_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_dataset(in);
}

void write_dataset(std::ostream& out, const Sample& s) {
    out << std::setprecision(17);
    if (s.scheme.kind == CensorKind::TypeI)
        out << "#censor_time=" << s.scheme.censor_time << "\n";
    out << "y,delta\n";
    for (std::size_t i = 0; i < s.y.size(); ++i)
        out << s.y[i] << "," << s.delta[i] << "\n";
}

Sample to_sample(const DatasetFile& file, std::optional<CensorScheme> scheme) {
    Sample s;
    s.y = file.y;
    s.delta = file.delta;
    if (scheme) {
        s.scheme = *scheme;
        if (s.scheme.kind == CensorKind::TypeI && s.scheme.censor_time <= 0.0 &&
            file.censor_time)
            s.scheme.censor_time = *file.censor_time;
    } else if (file.censor_time) {
        s.scheme = CensorScheme::type1(*file.censor_time);
    } else {
        bool all_obs = true;
        for (int d : file.delta) all_obs = all_obs && d == 1;
        s.scheme = all_obs ? CensorScheme::complete() : CensorScheme::random_weibull();
    }
    s.validate();
    return s;
}

}  // namespace wmml
