#pragma once

#include <stdexcept>
#include <string>

namespace apn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDegree : public Error { public: using Error::Error; };
class RejectedPolynomial : public Error { public: using Error::Error; };
class ZeroHasNoOrder : public Error { public: using Error::Error; };
class NotASubfield : public Error { public: using Error::Error; };
class FieldMismatch : public Error { public: using Error::Error; };
class WrongField : public Error { public: using Error::Error; };
class NotLinear : public Error { public: using Error::Error; };
class NotBijective : public Error { public: using Error::Error; };
class NotApn : public Error { public: using Error::Error; };
class EmptyElement : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class FileError : public Error { public: using Error::Error; };

}  // namespace apn
