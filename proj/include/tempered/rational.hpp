#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tempered {

using Rat = boost::rational<long long>;
using Weight = std::vector<Rat>;              // coordinates in the simple-root basis
using Root = std::vector<int>;                // integer coordinates in the simple-root basis
using IntMat = std::vector<std::vector<int>>; // row-major, acts on column vectors

/// Raised for every documented domain failure; the message is part of the
/// library contract and is what the CLI prints before exiting with code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parseRat(const std::string& text);
std::string ratStr(const Rat& r);

/// Parses a comma-separated rational vector; the empty string means zero.
Weight parseWeight(const std::string& text, int rank);
std::string weightStr(const Weight& w);
std::string rootStr(const Root& r);

Weight toWeight(const Root& r);
Root negated(const Root& r);
Weight negated(const Weight& w);
bool isZero(const Weight& w);
Weight addWeights(const Weight& a, const Weight& b);
Weight scaleWeight(const Rat& c, const Weight& w);

Root applyMat(const IntMat& m, const Root& v);
Weight applyMat(const IntMat& m, const Weight& v);
IntMat matMul(const IntMat& a, const IntMat& b);
IntMat identityMat(int n);
/// Inverse of a unimodular integer matrix (Weyl elements, involutions).
IntMat matInverse(const IntMat& m);
int matTrace(const IntMat& m);

double toDouble(const Rat& r);

} // namespace tempered
