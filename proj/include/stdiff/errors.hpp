#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace stdiff {

// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
public:
    explicit UnknownElement(std::string symbol)
        : Error("unknown element symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

class ParseError : public Error {
public:
    ParseError(std::string reason, std::size_t position)
        : Error(reason + " at position " + std::to_string(position)),
          reason_(std::move(reason)),
          position_(position) {}
    const std::string& reason() const noexcept { return reason_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string reason_;
    std::size_t position_;
};

class UnitMismatch : public Error {
public:
    using Error::Error;
};

class NegativeInput : public Error {
public:
    explicit NegativeInput(const std::string& what) : Error("negative input: " + what) {}
};

class NonPositive : public Error {
public:
    explicit NonPositive(std::string name)
        : Error("value must be strictly positive: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NonPositiveMass : public NonPositive {
public:
    NonPositiveMass() : NonPositive("mass") {}
};

class UnknownConstant : public Error {
public:
    explicit UnknownConstant(std::string name)
        : Error("unknown constant '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class MissingNoise : public Error {
public:
    explicit MissingNoise(const std::string& record)
        : Error("record '" + record + "' has neither sqrt_sf nor sqrt_sa") {}
};

class ModelMismatch : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

}  // namespace stdiff
