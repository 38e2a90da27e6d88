#pragma once

#include <string>

#include "gw/gt_table.hpp"
#include "gw/int_matrix.hpp"
#include "gw/mapping_torus.hpp"

namespace gw {

/*
 * Plain-text formats.
 *
 * Matrix: rows of space-separated integers, one row per line. The token
 * "[]" (or an empty document) denotes the 0x0 matrix. Lines starting with
 * '#' are comments.
 *
 * Homology action: matrix blocks separated by blank lines; block k is the
 * action on H_k starting from k = 0.
 *
 * Relative table: header line "gt-table", then one record per line:
 *   <euler> <b1> <b2> [s1,s2,...] <count>
 * Canonical output sorts records by key; parsing accepts any order and
 * merges duplicates.
 *
 * S-matrix: header line "s-matrix", optional "base identity|zero" line
 * (default identity), then records "[s1,s2,...] <db1> <db2> <weight>".
 */

IntMatrix parse_matrix(const std::string& text);
std::string matrix_text(const IntMatrix& m);

HomologyAction parse_homology_action(const std::string& text);

RelTable parse_rel_table(const std::string& text);
std::string rel_table_text(const RelTable& table);

SMatrix parse_smatrix(const std::string& text);

// Whole-file convenience wrappers; throw std::runtime_error when the file
// cannot be read.
std::string read_file(const std::string& path);

}  // namespace gw
