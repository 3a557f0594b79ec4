/*
  This is error.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_ERROR_H
#define IVH_ERROR_H

#include <stdexcept>
#include <string>

namespace ivh {

/*
  Three error classes cover the whole library.

  DomainError   : the request is outside the mathematical domain of the
                  operation (bad descriptor, infinite parabolic where a finite
                  one is required, odd exponent where an even one is needed).
                  The caller supplied something we refuse to process.
  LimitError    : a configured resource bound (element cap, length cap) was
                  hit before the computation finished.
  InternalError : an invariant the library itself guarantees failed; this is
                  a bug or an unsound configuration and is never silent.
*/

class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ivh

#endif
