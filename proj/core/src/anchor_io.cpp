#include "ochain/anchor_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ochain {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

} // namespace

std::vector<Anchor> read_anchors(std::istream& in) {
    std::vector<Anchor> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        Anchor x;
        if (!(ss >> x.a >> x.b >> x.c >> x.d)) {
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected four integers");
        }
        std::string rest;
        if (ss >> rest) {
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": trailing content '" + rest + "'");
        }
        out.push_back(x);
    }
    return out;
}

std::vector<Anchor> read_anchors_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_anchors(in);
}

void write_anchors(std::ostream& out, const std::vector<Anchor>& anchors) {
    for (const Anchor& x : anchors) {
        out << x.a << '\t' << x.b << '\t' << x.c << '\t' << x.d << '\n';
    }
}

StringPair read_sequence_pair(std::istream& in) {
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        strip_cr(line);
        lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("empty sequence file");

    StringPair sp;
    if (lines[0].size() > 0 && lines[0][0] == '>') {
        std::vector<std::string> records;
        for (const std::string& l : lines) {
            if (l.empty()) continue;
            if (l[0] == '>') {
                records.emplace_back();
            } else if (records.empty()) {
                throw std::runtime_error("FASTA input starts without a header");
            } else {
                records.back() += l;
            }
        }
        if (records.size() != 2) {
            throw std::runtime_error("expected exactly two FASTA records, got " +
                                     std::to_string(records.size()));
        }
        sp.text = std::move(records[0]);
        sp.pattern = std::move(records[1]);
    } else {
        if (lines.size() < 2) {
            throw std::runtime_error("plain sequence input needs two lines");
        }
        for (std::size_t i = 2; i < lines.size(); ++i) {
            if (!lines[i].empty()) {
                throw std::runtime_error("unexpected content after the two sequences");
            }
        }
        sp.text = lines[0];
        sp.pattern = lines[1];
    }
    return sp;
}

StringPair read_sequence_pair_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_sequence_pair(in);
}

} // namespace ochain
