#pragma once

#include <cstdint>
#include <string>

#include "suncheck/errors.hpp"

namespace suncheck {

// Calendar date-time with a mandatory numeric UTC offset. No timezone
// database is consulted anywhere; the offset is taken as written.
struct Timestamp {
  int year = 2000;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  int hour = 0;   // 0..23
  int minute = 0;
  int second = 0;
  int utc_offset_minutes = 0;  // [-12h, +14h]

  // Local clock time as fractional hours.
  double local_hours() const { return hour + minute / 60.0 + second / 3600.0; }

  // Days elapsed since January 1st of the same year (Jan 1 -> 0).
  int day_of_year() const;

  // Shift the local clock, carrying across day/month/year boundaries.
  // The UTC offset is kept as-is.
  Timestamp shifted_by_minutes(std::int64_t minutes) const;

  // Shift the calendar date, keeping the clock time and offset.
  Timestamp shifted_by_days(int days) const;

  std::string to_iso8601() const;

  // Accepts "YYYY-MM-DDTHH:MM[:SS]+HH:MM" (offset also without the colon or
  // as +HH). The offset is required.
  static Timestamp parse_iso8601(const std::string& text);

  void validate() const;
};

// Number of days in a calendar year (365 or 366).
int days_in_year(int year);

}  // namespace suncheck
