#pragma once

#include <iosfwd>
#include <string>

#include "y00/transcript.hpp"

namespace y00 {

/// Transcripts persist as CSV up to this many records, binary above.
constexpr std::size_t kTranscriptCsvLimit = 100'000;

/// CSV layout: header "i,x,r,l,y_re,y_im,b_bob", one row per record,
/// doubles rendered with %.17g (round-trip exact).
void write_transcript_csv(const Transcript& t, std::ostream& os);
Transcript read_transcript_csv(std::istream& is);

/// Binary layout, all little-endian: magic "Y00T", u32 version (1),
/// u64 record count, then per record a u32 payload length (26) followed by
/// u8 x, u32 basis, u32 state, f64 y_re, f64 y_im, u8 b_bob.
void write_transcript_binary(const Transcript& t, std::ostream& os);
Transcript read_transcript_binary(std::istream& is);

/// Writes CSV or binary by the size threshold; reads back either by
/// sniffing the magic.
void save_transcript(const Transcript& t, const std::string& path);
Transcript load_transcript(const std::string& path);

}  // namespace y00
