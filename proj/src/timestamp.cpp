#include "suncheck/timestamp.hpp"

#include <chrono>
#include <cstdio>

namespace suncheck {

namespace chr = std::chrono;

namespace {

chr::year_month_day to_ymd(const Timestamp& ts) {
  return chr::year{ts.year} / ts.month / ts.day;
}

Timestamp with_date(const Timestamp& ts, const chr::year_month_day& ymd) {
  Timestamp out = ts;
  out.year = static_cast<int>(ymd.year());
  out.month = static_cast<int>(static_cast<unsigned>(ymd.month()));
  out.day = static_cast<int>(static_cast<unsigned>(ymd.day()));
  return out;
}

}  // namespace

void Timestamp::validate() const {
  if (!to_ymd(*this).ok())
    throw Error(ErrorCode::Context, "invalid calendar date " + to_iso8601());
  if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 60)
    throw Error(ErrorCode::Context, "invalid clock time " + to_iso8601());
  if (utc_offset_minutes < -12 * 60 || utc_offset_minutes > 14 * 60)
    throw Error(ErrorCode::Context, "UTC offset outside [-12h, +14h]");
}

int Timestamp::day_of_year() const {
  const auto date = chr::sys_days(to_ymd(*this));
  const auto jan1 = chr::sys_days(chr::year{year} / 1 / 1);
  return static_cast<int>((date - jan1).count());
}

Timestamp Timestamp::shifted_by_minutes(std::int64_t minutes) const {
  auto tp = chr::sys_days(to_ymd(*this)) + chr::hours(hour) + chr::minutes(minute) +
            chr::seconds(second) + chr::minutes(minutes);
  const auto days = chr::floor<chr::days>(tp);
  const auto tod = chr::hh_mm_ss<chr::seconds>(chr::duration_cast<chr::seconds>(tp - days));
  Timestamp out = with_date(*this, chr::year_month_day(days));
  out.hour = static_cast<int>(tod.hours().count());
  out.minute = static_cast<int>(tod.minutes().count());
  out.second = static_cast<int>(tod.seconds().count());
  return out;
}

Timestamp Timestamp::shifted_by_days(int days) const {
  const auto date = chr::sys_days(to_ymd(*this)) + chr::days(days);
  return with_date(*this, chr::year_month_day(date));
}

std::string Timestamp::to_iso8601() const {
  char buf[64];
  const int off = utc_offset_minutes;
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d%c%02d:%02d", year, month,
                day, hour, minute, second, off < 0 ? '-' : '+', std::abs(off) / 60,
                std::abs(off) % 60);
  return buf;
}

Timestamp Timestamp::parse_iso8601(const std::string& text) {
  Timestamp ts;
  int consumed = 0;
  int fields = std::sscanf(text.c_str(), "%d-%d-%dT%d:%d%n", &ts.year, &ts.month, &ts.day,
                           &ts.hour, &ts.minute, &consumed);
  if (fields != 5)
    throw Error(ErrorCode::Parse, "timestamp not in ISO 8601 form: '" + text + "'");

  const char* rest = text.c_str() + consumed;
  if (*rest == ':') {
    int used = 0;
    if (std::sscanf(rest, ":%d%n", &ts.second, &used) != 1)
      throw Error(ErrorCode::Parse, "bad seconds field in '" + text + "'");
    rest += used;
  }

  // Numeric UTC offset is mandatory: +HH:MM, +HHMM or +HH.
  const char sign = *rest;
  if (sign != '+' && sign != '-')
    throw Error(ErrorCode::Parse, "timestamp must carry a numeric UTC offset: '" + text + "'");
  ++rest;
  int oh = 0, om = 0;
  int used = 0;
  if (std::sscanf(rest, "%2d:%2d%n", &oh, &om, &used) == 2 && rest[used] == '\0') {
  } else if (std::sscanf(rest, "%2d%2d%n", &oh, &om, &used) == 2 && rest[used] == '\0') {
  } else if (std::sscanf(rest, "%2d%n", &oh, &used) == 1 && rest[used] == '\0') {
    om = 0;
  } else {
    throw Error(ErrorCode::Parse, "bad UTC offset in '" + text + "'");
  }
  ts.utc_offset_minutes = (sign == '-') ? -(oh * 60 + om) : (oh * 60 + om);
  ts.validate();
  return ts;
}

int days_in_year(int year) {
  const auto jan1 = chr::sys_days(chr::year{year} / 1 / 1);
  const auto next = chr::sys_days(chr::year{year + 1} / 1 / 1);
  return static_cast<int>((next - jan1).count());
}

}  // namespace suncheck
