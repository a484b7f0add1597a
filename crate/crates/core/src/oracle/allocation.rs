/// Can `count` parts of size `size` be split as `4a + 2b + c`, where the `b`
/// pairs need an even size, the `c` singles need a size divisible by 4, and
/// `a = 0` unless `allow_g1`? Plain search over `(a, b, c)`.
pub fn allocation_bruteforce(size: u32, count: u32, allow_g1: bool) -> bool {
    let even = size % 2 == 0;
    let div4 = size % 4 == 0;
    let max_a = if allow_g1 { count / 4 } else { 0 };
    for a in 0..=max_a {
        for b in 0..=count / 2 {
            if b > 0 && !even {
                continue;
            }
            for c in 0..=count {
                if c > 0 && !div4 {
                    continue;
                }
                if 4 * a + 2 * b + c == count {
                    return true;
                }
            }
        }
    }
    false
}
