// Words over {A,B,a,b}; lowercase is the inverse letter.
#pragma once

#include <string>
#include <string_view>

namespace chyp {

bool is_group_word(std::string_view w);
char inverse_letter(char c);
std::string inverse_word(std::string_view w);
std::string free_reduce(std::string_view w);
std::string cyclic_reduce(std::string_view w);

// A^k w a^k, the word of the element attached to the k-th translate of w.
std::string conjugate_by_A(std::string_view w, int k);

// Cycle-relation normal form: "id", "B^3", "b^3" or "(aB)^4" style.
// Free and cyclic reduction first, then B^3 = 1 is used to collapse B-runs.
std::string relation_normal_form(std::string_view w);

// Class of a normal form under rotation and inversion, for comparing relation lists.
std::string relation_class(std::string_view normal_form);

}  // namespace chyp
