#pragma once

#include <stdexcept>
#include <string>

namespace probqsar {

// Base class for all library errors. Subclasses carry no extra state unless
// noted; the message names the offending value/file/tensor.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NonFiniteValue : public Error {
public:
  using Error::Error;
};

class InsufficientData : public Error {
public:
  using Error::Error;
};

class EmptyBatch : public Error {
public:
  using Error::Error;
};

class EmptyCorpus : public Error {
public:
  using Error::Error;
};

class EmptySequence : public Error {
public:
  using Error::Error;
};

class EmptyMolecule : public Error {
public:
  using Error::Error;
};

class NoCachedForward : public Error {
public:
  using Error::Error;
};

class SingularSystem : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  using Error::Error;
};

class ConstantTruth : public Error {
public:
  using Error::Error;
};

class TooFewSamples : public Error {
public:
  using Error::Error;
};

class FileNotFound : public Error {
public:
  using Error::Error;
};

class MissingColumn : public Error {
public:
  using Error::Error;
};

class NoValidRows : public Error {
public:
  using Error::Error;
};

class VersionMismatch : public Error {
public:
  using Error::Error;
};

class CorruptFile : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace probqsar
