#pragma once

#include <map>
#include <memory>
#include <string>

#include "cdanalysis/algebra.hpp"

namespace cd {

/// Compiled expression over one free variable. Grammar (documented in the
/// README): reals, pi, e, generators i1..i7, identifiers t/z/p/y, + - * / ^,
/// calls exp sin cos ln abs step sqrt re im conj inv. Products associate
/// left to right; an unparenthesized product chain may contain at most two
/// possibly-nonreal factors, more require explicit parentheses since the
/// algebra is noncommutative.
class Expression {
public:
    static Expression parse(const std::string& text);

    /// Evaluates with every free variable bound to the same value.
    CdNumber eval(const CdNumber& var) const;

    /// Evaluates with named bindings; unbound identifiers raise ParseError.
    CdNumber eval(const std::map<std::string, CdNumber>& bindings) const;

    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace cd
