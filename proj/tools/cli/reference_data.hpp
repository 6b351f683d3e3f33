#pragma once

// Published values the reproduction tables are compared against.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace flc::cli {

struct PublishedZeta {
    std::int64_t k;
    std::uint64_t prime;
};

/// Minimal (0,1) witnesses as published, ascending k.
inline constexpr std::array<PublishedZeta, 40> kPublishedZeta{{
    {-42, 13591}, {-40, 5591}, {-38, 5689}, {-36, 1153}, {-34, 14821}, {-32, 241},  {-28, 569},
    {-26, 1471},  {-24, 1031}, {-22, 10771}, {-20, 97},  {-18, 1289},  {-16, 1151}, {-14, 1009},
    {-12, 619},   {-10, 461},  {-8, 709},    {-6, 2251}, {-4, 5},      {-2, 7},     {0, 11},
    {2, 809},     {4, 113},    {6, 199},     {8, 41},    {10, 331},    {12, 17},    {14, 541},
    {16, 1999},   {18, 811},   {20, 89},     {22, 1231}, {24, 1409},   {28, 73},    {32, 1871},
    {34, 5741},   {36, 3499},  {38, 3391},   {40, 3919}, {42, 14969},
}};

struct PublishedThetaRow {
    std::int64_t a;
    std::int64_t b;
    std::vector<std::uint64_t> primes;
};

/// First listed elements of the 0-PL sets. The (-3,-7) row lists eleven.
inline std::vector<PublishedThetaRow> published_theta_rows()
{
    return {
        {0, 1, {11, 29, 31, 71, 131, 191, 229, 251, 271, 281}},
        {2, 1, {5, 13, 37, 53, 61, 109, 149, 151, 157, 173}},
        {5, 12, {11, 13, 19, 31, 37, 47, 61, 101, 107, 109}},
        {-9, -21, {13, 19, 29, 37, 47, 53, 61, 71, 79, 107}},
        {-23, -20, {31, 47, 59, 61, 71, 107, 109, 149, 173, 191}},
        {-232, -200, {13, 19, 47, 59, 61, 71, 101, 109, 173, 179}},
        {80, 21, {13, 19, 29, 31, 37, 47, 79, 149, 157, 173}},
        {-3, -7, {13, 19, 29, 31, 37, 47, 53, 61, 71, 101, 107}},
        {17, 102, {19, 31, 37, 47, 59, 61, 71, 79, 101, 107}},
        {6, 7, {11, 19, 37, 47, 59, 61, 101, 107, 109, 157}},
    };
}

struct FigureSpec {
    int id;
    std::int64_t a;
    std::int64_t b;
    double c; ///< reference constant; 0 when the figure has no curve
};

/// Figures 1-5: zeta scatter for one pair. Figure 6 is the omega series.
inline constexpr std::array<FigureSpec, 5> kScatterFigures{{
    {1, 0, 1, 0.0},
    {2, 0, 1, 0.055},
    {3, 2, 1, 0.061},
    {4, -2, 7, 0.042},
    {5, -2, -4, 0.055},
}};

inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 5> kOmegaFigurePairs{{
    {0, 1}, {2, 1}, {7, 6}, {-5, -2}, {-8, -2},
}};

} // namespace flc::cli
