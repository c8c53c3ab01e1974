//! Runs every example's `run_example` so the examples cannot rot.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            pub fn output() -> String {
                run_example().expect(stringify!($name))
            }
        }
    };
}

example!(matching_polynomial);
example!(root_structure);
example!(families);
example!(enumerate);
example!(comatching);
example!(verify_appendix);
example!(graph6_io);

#[test]
fn matching_polynomial_example() {
    let out = matching_polynomial::output();
    assert!(out.contains("Petersen: x^10-15x^8+75x^6-145x^4+90x^2-6"));
    assert!(out.contains("T(2,2): mu = x^7-6x^5+8x^3, charpoly = x^7-6x^5+8x^3, forest = true"));
}

#[test]
fn root_structure_example() {
    let out = root_structure::output();
    assert!(out.contains("L(1,2): z=5 zero_mult=1 R={0, ±1, ±√5}"));
    assert!(out.contains("T(3,2) interlaces at every vertex: true"));
}

#[test]
fn families_example() {
    let out = families::output();
    assert!(out.contains("F(3): 7 vertices, 9 edges"));
    assert!(out.contains("2 members sharing x^10-10x^8+28x^6-21x^4"));
}

#[test]
fn enumerate_example() {
    let out = enumerate::output();
    assert!(out.contains("graphs on 1..7 vertices: [1, 2, 4, 11, 34, 156, 1044]"));
    assert!(out.contains("trees on 6 vertices (6)"));
}

#[test]
fn comatching_example() {
    let out = comatching::output();
    assert!(out.contains("K(4,3;1): [K_{1,5} ∪ K_3]"));
    assert!(out.contains("F_2 matching unique: false"));
    assert!(out.contains("F_4 matching unique: true"));
}

#[test]
fn verify_appendix_example() {
    let out = verify_appendix::output();
    assert!(out.contains("appendix-polynomials: Confirmed, 30 witnesses"));
    assert!(!out.contains("elapsed_ms"));
}

#[test]
fn graph6_io_example() {
    let out = graph6_io::output();
    assert!(out.contains("21 connected 5-vertex graphs"));
    assert!(out.contains("K_4 as graph6: C~"));
}
