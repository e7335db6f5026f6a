#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wisp/image.hpp"

using namespace wisp;

TEST_CASE("image fill constructor initializes every pixel") {
    Image img(3, 2, 7.5);
    CHECK(img.width() == 3);
    CHECK(img.height() == 2);
    CHECK(img.size() == 6);
    for (double v : img.pixels()) CHECK(v == 7.5);
    Image zero(4, 4);
    for (double v : zero.pixels()) CHECK(v == 0.0);
}

TEST_CASE("image buffer constructor is row-major") {
    Image img(2, 3, std::vector<double>{1, 2, 3, 4, 5, 6});
    CHECK(img(0, 0) == 1);
    CHECK(img(1, 0) == 2);
    CHECK(img(0, 1) == 3);
    CHECK(img(1, 2) == 6);
    img(1, 2) = 9;
    CHECK(img.pixels()[5] == 9);
}

TEST_CASE("image constructor rejects bad dimensions") {
    CHECK_THROWS_AS(Image(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Image(4, -1), std::invalid_argument);
    CHECK_THROWS_AS(Image(2, 2, std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("pad_to_even replicates the last row and column") {
    Image img(3, 3, std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    PadResult padded = pad_to_even(img);
    CHECK(padded.image.width() == 4);
    CHECK(padded.image.height() == 4);
    CHECK(padded.original_width == 3);
    CHECK(padded.original_height == 3);
    CHECK(padded.image(3, 0) == 3);
    CHECK(padded.image(0, 3) == 7);
    CHECK(padded.image(3, 3) == 9);
    CHECK(padded.image(1, 1) == 5);
}

TEST_CASE("pad_to_even leaves even sizes alone") {
    Image img(4, 2, 3.0);
    PadResult padded = pad_to_even(img);
    CHECK(padded.image.width() == 4);
    CHECK(padded.image.height() == 2);
    CHECK(padded.image.pixels() == img.pixels());
}

TEST_CASE("pad_to_even pads a single odd axis") {
    Image img(2, 3, std::vector<double>{1, 2, 3, 4, 5, 6});
    PadResult padded = pad_to_even(img);
    CHECK(padded.image.width() == 2);
    CHECK(padded.image.height() == 4);
    CHECK(padded.image(0, 3) == 5);
    CHECK(padded.image(1, 3) == 6);
}

TEST_CASE("crop extracts the requested rectangle") {
    Image img(4, 4);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) img(x, y) = 10 * y + x;
    Image sub = crop(img, {1, 2, 2, 2});
    CHECK(sub.width() == 2);
    CHECK(sub.height() == 2);
    CHECK(sub(0, 0) == 21);
    CHECK(sub(1, 0) == 22);
    CHECK(sub(0, 1) == 31);
    CHECK(sub(1, 1) == 32);
}

TEST_CASE("crop rejects rectangles leaving the image") {
    Image img(4, 4);
    CHECK_THROWS_AS(crop(img, {3, 0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(crop(img, {-1, 0, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(crop(img, {0, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(crop(img, {0, 3, 1, 2}), std::invalid_argument);
}

TEST_CASE("gray_level clamps then rounds half away from zero") {
    CHECK(gray_level(-3.0) == 0);
    CHECK(gray_level(0.0) == 0);
    CHECK(gray_level(0.4999) == 0);
    CHECK(gray_level(0.5) == 1);
    CHECK(gray_level(1.5) == 2);
    CHECK(gray_level(2.5) == 3);
    CHECK(gray_level(127.49) == 127);
    CHECK(gray_level(254.5) == 255);
    CHECK(gray_level(255.0) == 255);
    CHECK(gray_level(300.0) == 255);
}
