#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ochain/anchor.hpp"
#include "ochain/generate.hpp"

namespace ochain {

/*
 * Anchor text format: one anchor per line, four tab-separated decimal
 * integers a b c d, 1-based inclusive. Lines beginning with '#' and blank
 * lines are ignored on input; output is written bit-exactly as
 * "a\tb\tc\td\n" per anchor.
 */
std::vector<Anchor> read_anchors(std::istream& in);
std::vector<Anchor> read_anchors_file(const std::string& path);
void write_anchors(std::ostream& out, const std::vector<Anchor>& anchors);

/*
 * Sequence pair input: either a plain two-line file (line 1 the text, line 2
 * the pattern) or FASTA with exactly two records, auto-detected by a leading
 * '>'.
 */
StringPair read_sequence_pair(std::istream& in);
StringPair read_sequence_pair_file(const std::string& path);

} // namespace ochain
