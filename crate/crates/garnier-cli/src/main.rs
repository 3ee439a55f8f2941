fn main() {
    println!("garnier");
}
