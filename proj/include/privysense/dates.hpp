#pragma once

#include <cstdint>

namespace privysense {

// Calendar dates are carried as YYYYMMDD integers throughout (the news and
// price feeds both use that encoding). Numeric order equals calendar order.
using Date = int32_t;

inline bool is_leap_year(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

inline int days_in_month(int y, int m) {
    static const int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap_year(y)) return 29;
    return kDays[m - 1];
}

inline bool is_valid_date(Date d) {
    int y = d / 10000;
    int m = (d / 100) % 100;
    int day = d % 100;
    if (y < 1 || m < 1 || m > 12 || day < 1) return false;
    return day <= days_in_month(y, m);
}

inline Date next_day(Date d) {
    int y = d / 10000;
    int m = (d / 100) % 100;
    int day = d % 100;
    if (day < days_in_month(y, m)) return d + 1;
    if (m < 12) return y * 10000 + (m + 1) * 100 + 1;
    return (y + 1) * 10000 + 101;
}

// Sakamoto's method; 0 = Sunday.
inline int day_of_week(Date d) {
    static const int t[] = {0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4};
    int y = d / 10000;
    int m = (d / 100) % 100;
    int day = d % 100;
    if (m < 3) y -= 1;
    return (y + y / 4 - y / 100 + y / 400 + t[m - 1] + day) % 7;
}

inline bool is_weekend(Date d) {
    int w = day_of_week(d);
    return w == 0 || w == 6;
}

}  // namespace privysense
