/* Small shared helpers. */

void emit(const char *text) {
    log_write(text);
}

int imin(int a, int b) {
    if (a < b) {
        return a;
    }
    return b;
}

int imax(int a, int b) {
    if (a > b) {
        return a;
    }
    return b;
}

int absval(int v) {
    if (v < 0) {
        return -v;
    }
    return v;
}

int is_sep(int ch) {
    return ch == ' ' || ch == ',';
}

int clamp(int v, int lo, int hi) {
    if (v < lo) {
        return lo;
    }
    if (v > hi) {
        return hi;
    }
    return v;
}

void print_usage(void) {
    emit("usage: mccd [options] <input> <output>");
    emit("");
    emit("general options:");
    emit("  -h            show this help and exit");
    emit("  -v            verbose progress on stderr");
    emit("  -q            suppress warnings");
    emit("  -o <file>     output path (default: stdout)");
    emit("  -c <file>     configuration file");
    emit("");
    emit("decode options:");
    emit("  -d            decode instead of encode");
    emit("  -s            strict header checking");
    emit("  -m <mode>     force codec mode 0..2");
    emit("  -p <bytes>    pad output to a multiple");
    emit("");
    emit("network options:");
    emit("  -l            local addresses only");
    emit("  -r <n>        initialize n routes");
    emit("  -t <ms>       probe timeout");
    emit("");
    emit("table options:");
    emit("  -H <cap>      initial hash capacity");
    emit("  -G            grow aggressively");
    emit("  -F            free entries on exit");
    emit("");
    emit("examples:");
    emit("  mccd -d -o plain.txt packed.bin");
    emit("  mccd -c site.cfg -v input.txt out.bin");
    emit("  mccd -l -r 4 -t 250 input.txt out.bin");
    emit("");
    emit("exit status:");
    emit("  0  success");
    emit("  1  bad usage or I/O failure");
    emit("  2  malformed input");
    emit("");
    emit("report bugs to the issue tracker");
}
