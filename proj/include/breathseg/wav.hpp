#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "breathseg/audio.hpp"
#include "breathseg/errors.hpp"

namespace breathseg {

namespace detail {

inline std::uint32_t read_u32le(const unsigned char* p) {
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
           std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
}
inline std::uint16_t read_u16le(const unsigned char* p) {
    return std::uint16_t(p[0]) | std::uint16_t(p[1]) << 8;
}
inline void put_u32le(std::string& s, std::uint32_t v) {
    s.push_back(char(v & 0xff));
    s.push_back(char((v >> 8) & 0xff));
    s.push_back(char((v >> 16) & 0xff));
    s.push_back(char((v >> 24) & 0xff));
}
inline void put_u16le(std::string& s, std::uint16_t v) {
    s.push_back(char(v & 0xff));
    s.push_back(char((v >> 8) & 0xff));
}

} // namespace detail

// Minimum rate at which a 2 kHz low-pass cutoff is still below Nyquist.
inline constexpr int kMinSampleRateHz = 4000;

// RIFF/WAVE reader. Accepts PCM 16-bit integer and IEEE float 32-bit data
// (also when wrapped in WAVE_FORMAT_EXTENSIBLE); any channel count is
// averaged down to mono. 16-bit samples are scaled by 1/32768.
inline AudioBuffer read_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        throw IoError("not a RIFF/WAVE file: " + path.string());

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    bool have_fmt = false;
    std::size_t data_off = 0, data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const unsigned char* hdr = bytes.data() + pos;
        std::uint32_t chunk_len = detail::read_u32le(hdr + 4);
        std::size_t body = pos + 8;
        if (body + chunk_len > bytes.size())
            throw IoError("truncated chunk in " + path.string());
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (chunk_len < 16) throw IoError("malformed fmt chunk: " + path.string());
            const unsigned char* f = bytes.data() + body;
            format = detail::read_u16le(f);
            channels = detail::read_u16le(f + 2);
            rate = detail::read_u32le(f + 4);
            bits = detail::read_u16le(f + 14);
            if (format == 0xFFFE) {
                // extensible: actual format is the first word of the SubFormat GUID
                if (chunk_len < 40)
                    throw IoError("malformed extensible fmt chunk: " + path.string());
                format = detail::read_u16le(f + 24);
            }
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            data_off = body;
            data_len = chunk_len;
        }
        pos = body + chunk_len + (chunk_len & 1); // chunks are word-aligned
    }

    if (!have_fmt || data_off == 0)
        throw IoError("missing fmt/data chunk: " + path.string());
    if (channels == 0 || rate == 0)
        throw IoError("malformed fmt chunk: " + path.string());
    const bool pcm16 = (format == 1 && bits == 16);
    const bool float32 = (format == 3 && bits == 32);
    if (!pcm16 && !float32)
        throw IoError("unsupported encoding (format=" + std::to_string(format) +
                      ", bits=" + std::to_string(bits) + "): " + path.string());
    if (rate < kMinSampleRateHz)
        throw IoError("sample rate " + std::to_string(rate) +
                      " Hz below minimum 4000 Hz: " + path.string());

    const std::size_t bytes_per_sample = bits / 8;
    const std::size_t block = bytes_per_sample * channels;
    const std::size_t frames = data_len / block;
    if (frames == 0) throw IoError("empty data chunk: " + path.string());

    AudioBuffer audio;
    audio.sample_rate = static_cast<int>(rate);
    audio.samples.resize(frames);
    const unsigned char* d = bytes.data() + data_off;
    for (std::size_t i = 0; i < frames; ++i) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < channels; ++c) {
            const unsigned char* s = d + i * block + c * bytes_per_sample;
            if (pcm16) {
                std::int16_t v = static_cast<std::int16_t>(detail::read_u16le(s));
                acc += v / 32768.0;
            } else {
                std::uint32_t u = detail::read_u32le(s);
                float v;
                std::memcpy(&v, &u, 4);
                acc += v;
            }
        }
        double mono = acc / channels;
        if (!std::isfinite(mono))
            throw IoError("non-finite sample in " + path.string());
        audio.samples[i] = mono;
    }
    return audio;
}

// PCM16 mono writer. Samples are clamped to [-1, 1] and quantized with
// round-half-away-from-zero, so equal inputs give byte-identical files.
inline void write_wav(const AudioBuffer& audio, const std::filesystem::path& path) {
    audio.validate();
    const std::uint32_t n = static_cast<std::uint32_t>(audio.samples.size());
    const std::uint32_t rate = static_cast<std::uint32_t>(audio.sample_rate);
    std::string out;
    out.reserve(44 + 2 * n);
    out += "RIFF";
    detail::put_u32le(out, 36 + 2 * n);
    out += "WAVEfmt ";
    detail::put_u32le(out, 16);
    detail::put_u16le(out, 1);        // PCM
    detail::put_u16le(out, 1);        // mono
    detail::put_u32le(out, rate);
    detail::put_u32le(out, rate * 2); // byte rate
    detail::put_u16le(out, 2);        // block align
    detail::put_u16le(out, 16);       // bits
    out += "data";
    detail::put_u32le(out, 2 * n);
    for (double v : audio.samples) {
        double c = std::min(1.0, std::max(-1.0, v));
        long q = std::lround(c * 32767.0);
        detail::put_u16le(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw IoError("write failed: " + path.string());
}

} // namespace breathseg
