#include <stdio.h>
#include <stdlib.h>

#include "threshold_spectra.h"

static int fail(const char *what) {
    const char *msg = ts_last_error();
    fprintf(stderr, "%s: %s\n", what, msg ? msg : "unknown error");
    return 1;
}

int main(int argc, char **argv) {
    const char *text = argc > 1 ? argv[1] : "0^2 1^6 0^2 1^9 0^3 1 0^6 1^2 0^3 1^4";
    TsGraph *g = NULL;
    if (ts_graph_parse(text, &g) != TS_STATUS_OK) {
        return fail("parse");
    }

    size_t n = ts_graph_order(g);
    double *values = (double *)malloc(n * sizeof *values);
    if (ts_graph_eigenvalues(g, values, n) != TS_STATUS_OK) {
        free(values);
        ts_graph_free(g);
        return fail("eigenvalues");
    }
    printf("order %zu  lambda_min %.6f  lambda_max %.6f\n", n, values[0], values[n - 1]);

    TsInertia in;
    ts_graph_inertia(g, &in);
    printf("inertia (%zu, %zu, %zu)\n", in.negatives, in.zeros, in.positives);

    size_t m = 0;
    size_t *idx = (size_t *)malloc(n * sizeof *idx);
    ts_graph_antiregular_subgraph(g, idx, n, &m);
    size_t big_n = 0;
    ts_graph_antiregular_supergraph(g, NULL, 0, &big_n);
    printf("m %zu  N %zu\n", m, big_n);

    TsBounds b;
    ts_graph_bounds(g, &b);
    printf("bounds %.6f %.6f\n", b.upper_bound_lambda_min, b.lower_bound_lambda_max);

    free(idx);
    free(values);
    ts_graph_free(g);
    return 0;
}
