#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace mtqe {

// Four-valued quality label. Canonical order: Poor < Average < Good < Excellent.
enum class Grade : int {
    Poor = 0,
    Average = 1,
    Good = 2,
    Excellent = 3,
};

inline constexpr std::size_t kGradeCount = 4;

inline constexpr std::array<Grade, kGradeCount> kAllGrades = {
    Grade::Poor, Grade::Average, Grade::Good, Grade::Excellent};

std::string_view grade_name(Grade g);

// Parses the lowercase names used in TSV files ("poor", ..., "excellent").
// Throws DataError on anything else.
Grade parse_grade(std::string_view name);

}  // namespace mtqe
