#pragma once

#include <string>
#include <vector>

#include "lmforge/freefox/word.hpp"

namespace lmforge {

// Endomorphism of the free group F_arity given by the images of the generators.
class FreeEndomorphism {
public:
    FreeEndomorphism() = default;
    FreeEndomorphism(int arity, std::vector<FreeWord> images) : arity_(arity), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != arity_)
            throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(arity_) + " images");
        for (const auto& w : images_)
            if (w.max_gen() > arity_)
                throw Error(ErrorKind::IndexOutOfRange, "image " + w.to_string() + " leaves F_" + std::to_string(arity_));
    }

    static FreeEndomorphism identity(int arity) {
        std::vector<FreeWord> images;
        for (int i = 1; i <= arity; ++i) images.push_back(FreeWord::gen(i));
        return {arity, std::move(images)};
    }

    int arity() const { return arity_; }
    const std::vector<FreeWord>& images() const { return images_; }
    const FreeWord& image(int i) const {
        if (i < 1 || i > arity_) throw Error(ErrorKind::IndexOutOfRange, "generator x" + std::to_string(i));
        return images_[static_cast<std::size_t>(i - 1)];
    }

    FreeWord apply(const FreeWord& w) const {
        FreeWord out;
        for (const auto& l : w.letters()) {
            const FreeWord& img = image(l.gen);
            out *= l.exp > 0 ? img : img.inverse();
        }
        return out;
    }

    // (this o other)(x) = this(other(x))
    FreeEndomorphism compose(const FreeEndomorphism& other) const {
        if (other.arity_ != arity_)
            throw Error(ErrorKind::ArityMismatch,
                        "composing F_" + std::to_string(arity_) + " with F_" + std::to_string(other.arity_));
        std::vector<FreeWord> images;
        images.reserve(images_.size());
        for (const auto& w : other.images_) images.push_back(apply(w));
        return {arity_, std::move(images)};
    }

    bool operator==(const FreeEndomorphism&) const = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) out += (i ? ", " : "") + images_[i].to_string();
        return out + "]";
    }

private:
    int arity_ = 0;
    std::vector<FreeWord> images_;
};

}  // namespace lmforge
