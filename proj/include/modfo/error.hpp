#ifndef MODFO_ERROR_HPP
#define MODFO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace modfo {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax or symbol errors with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  int line;
  int column;
};

class EvalError : public Error {
public:
  using Error::Error;
};

class InterpError : public Error {
public:
  using Error::Error;
};

class VerifyError : public Error {
public:
  using Error::Error;
};

}  // namespace modfo

#endif
