#pragma once

#include "coincide/rat.hpp"

#include <vector>

namespace coincide {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix transposed() const;
    void append_row(const std::vector<Rat>& row);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct LinearSolveOutcome {
    enum class Kind { Unique, Inconsistent, Underdetermined };
    Kind kind = Kind::Inconsistent;
    std::vector<Rat> x;  // Unique only
    int rank = 0;        // coefficient rank

    bool unique() const { return kind == Kind::Unique; }
};

int rank(const RatMatrix& m);
LinearSolveOutcome solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace coincide
