#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <string_view>
#include <utility>

namespace distcomm {

// Country names as they appear in the final segment of SCI/WoS institutional
// addresses, mapped to ISO-3166 alpha-2. Includes the historical spellings
// found in 1980s-1990s records (FED REP GER, USSR, ...).
inline constexpr std::pair<std::string_view, std::string_view> kCountryAliases[] = {
        {"ALGERIA", "DZ"},
        {"ARGENTINA", "AR"},
        {"ARMENIA", "AM"},
        {"AUSTRALIA", "AU"},
        {"AUSTRIA", "AT"},
        {"BANGLADESH", "BD"},
        {"BELARUS", "BY"},
        {"BELGIUM", "BE"},
        {"BOLIVIA", "BO"},
        {"BOSNIA & HERCEG", "BA"},
        {"BRAZIL", "BR"},
        {"BULGARIA", "BG"},
        {"BYELARUS", "BY"},
        {"CAMEROON", "CM"},
        {"CANADA", "CA"},
        {"CHILE", "CL"},
        {"CHINA", "CN"},
        {"COLOMBIA", "CO"},
        {"COSTA RICA", "CR"},
        {"CROATIA", "HR"},
        {"CUBA", "CU"},
        {"CYPRUS", "CY"},
        {"CZECH REPUBLIC", "CZ"},
        {"CZECHOSLOVAKIA", "CZ"},
        {"DENMARK", "DK"},
        {"ECUADOR", "EC"},
        {"EGYPT", "EG"},
        {"ENGLAND", "GB"},
        {"ESTONIA", "EE"},
        {"ETHIOPIA", "ET"},
        {"FED REP GER", "DE"},
        {"FINLAND", "FI"},
        {"FRANCE", "FR"},
        {"GER DEM REP", "DE"},
        {"GERMANY", "DE"},
        {"GHANA", "GH"},
        {"GREAT BRITAIN", "GB"},
        {"GREECE", "GR"},
        {"HONG KONG", "HK"},
        {"HUNGARY", "HU"},
        {"ICELAND", "IS"},
        {"INDIA", "IN"},
        {"INDONESIA", "ID"},
        {"IRAN", "IR"},
        {"IRAQ", "IQ"},
        {"IRELAND", "IE"},
        {"ISRAEL", "IL"},
        {"ITALY", "IT"},
        {"JAMAICA", "JM"},
        {"JAPAN", "JP"},
        {"JORDAN", "JO"},
        {"KAZAKHSTAN", "KZ"},
        {"KENYA", "KE"},
        {"KOREA", "KR"},
        {"KUWAIT", "KW"},
        {"LATVIA", "LV"},
        {"LEBANON", "LB"},
        {"LITHUANIA", "LT"},
        {"LUXEMBOURG", "LU"},
        {"MACEDONIA", "MK"},
        {"MALAYSIA", "MY"},
        {"MALTA", "MT"},
        {"MEXICO", "MX"},
        {"MONACO", "MC"},
        {"MOROCCO", "MA"},
        {"NEPAL", "NP"},
        {"NETHERLANDS", "NL"},
        {"NEW ZEALAND", "NZ"},
        {"NIGERIA", "NG"},
        {"NORTH IRELAND", "GB"},
        {"NORTHERN IRELAND", "GB"},
        {"NORWAY", "NO"},
        {"PAKISTAN", "PK"},
        {"PANAMA", "PA"},
        {"PEOPLES R CHINA", "CN"},
        {"PERU", "PE"},
        {"PHILIPPINES", "PH"},
        {"POLAND", "PL"},
        {"PORTUGAL", "PT"},
        {"PUERTO RICO", "PR"},
        {"QATAR", "QA"},
        {"REP OF GEORGIA", "GE"},
        {"ROMANIA", "RO"},
        {"RUSSIA", "RU"},
        {"SAUDI ARABIA", "SA"},
        {"SCOTLAND", "GB"},
        {"SENEGAL", "SN"},
        {"SERBIA", "RS"},
        {"SINGAPORE", "SG"},
        {"SLOVAKIA", "SK"},
        {"SLOVENIA", "SI"},
        {"SOUTH AFRICA", "ZA"},
        {"SOUTH KOREA", "KR"},
        {"SPAIN", "ES"},
        {"SRI LANKA", "LK"},
        {"SUDAN", "SD"},
        {"SWEDEN", "SE"},
        {"SWITZERLAND", "CH"},
        {"SYRIA", "SY"},
        {"TAIWAN", "TW"},
        {"TANZANIA", "TZ"},
        {"THAILAND", "TH"},
        {"TUNISIA", "TN"},
        {"TURKEY", "TR"},
        {"U ARAB EMIRATES", "AE"},
        {"UGANDA", "UG"},
        {"UK", "GB"},
        {"UKRAINE", "UA"},
        {"UNITED ARAB EMIRATES", "AE"},
        {"UNITED KINGDOM", "GB"},
        {"UNITED STATES", "US"},
        {"URUGUAY", "UY"},
        {"USA", "US"},
        {"USSR", "RU"},
        {"UZBEKISTAN", "UZ"},
        {"VENEZUELA", "VE"},
        {"VIETNAM", "VN"},
        {"W GERMANY", "DE"},
        {"WALES", "GB"},
        {"WEST GERMANY", "DE"},
        {"YUGOSLAVIA", "RS"},
        {"ZAIRE", "CD"},
        {"ZAMBIA", "ZM"},
        {"ZIMBABWE", "ZW"},
        {"BOTSWANA", "BW"},
        {"GUATEMALA", "GT"},
        {"LIECHTENSTEIN", "LI"},
        {"OMAN", "OM"},
        {"TRINIDAD TOBAGO", "TT"},
};

// Looks up an uppercase, trimmed country name.
inline std::optional<std::string_view> country_code_for(std::string_view name) {
  const auto* it = std::find_if(std::begin(kCountryAliases), std::end(kCountryAliases),
                                [&](const auto& entry) { return entry.first == name; });
  if (it == std::end(kCountryAliases)) return std::nullopt;
  return it->second;
}

}  // namespace distcomm
