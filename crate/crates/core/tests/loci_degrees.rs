use binform_core::loci::{covariant_a, degree_order_on_line};
use binform_core::special::DEFAULT_SEED;

// A_n has degree-order (2n, 2n(d-n-1)) for every d <= 7. The symbolic
// determinants for d = 7, n = 3..5 take minutes, so those cells are read
// along seeded lines in coefficient space instead.
#[test]
fn degree_orders_up_to_seven() {
    for d in 2..=7u32 {
        for n in 1..d {
            let want = (2 * n, 2 * n * (d - n - 1));
            let got = if d == 7 && (3..=5).contains(&n) {
                degree_order_on_line(n, d, DEFAULT_SEED).unwrap()
            } else {
                let a = covariant_a(n, d).unwrap();
                (a.degree_in_a(d as usize).unwrap(), a.order())
            };
            assert_eq!(got, want, "d={d} n={n}");
        }
    }
}
