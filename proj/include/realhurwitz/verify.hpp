#pragma once

#include "realhurwitz/rational.hpp"

#include <string>
#include <vector>

namespace realhurwitz {

// One identity family checked over a range of cases. On failure the first
// mismatching case is kept with both exact sides.
struct CheckLine {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string failing_case;
    std::string lhs;
    std::string rhs;

    void expect(const std::string& case_label, const Rational& left, const Rational& right);
    void expect(const std::string& case_label, bool ok, const std::string& left = "", const std::string& right = "");
};

std::string format_line(const CheckLine& line);
bool all_passed(const std::vector<CheckLine>& lines);

// Degeneration formulas (a)-(d) on S_d, d <= max_degree, target genus <= max_genus,
// at most two classes in total.
std::vector<CheckLine> verify_degeneration_suite(int max_degree = 4, int max_genus = 3);
// Oracle against closed formula and operator product, every (h, k) with 2h + k = g.
std::vector<CheckLine> verify_oracle_suite(int max_degree = 4, int max_genus = 2);
// Closed SFS, the SFS/FS relation, vanishing on odd classes and L c = 0.
std::vector<CheckLine> verify_sfs_suite(int max_degree = 7);
// Extended Frobenius axioms, functoriality under (a)-(d), gluing invariance and
// agreement with the closed formula, for S_d with 2 <= d <= max_degree.
std::vector<CheckLine> verify_frobenius_suite(int max_degree = 5);
// Completed-cycle identities for k <= max_k and |mu| <= max_size.
std::vector<CheckLine> verify_completed_suite(int max_k = 6, int max_size = 8);

}  // namespace realhurwitz
